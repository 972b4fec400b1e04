#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "mapcount/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"mapcount"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  CliResult r;
  r.code = mapcount::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data_file(const char* name) {
  return std::string(MAPCOUNT_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("count maps") {
  const CliResult r = run_cli({"count", "maps", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "24057\n");
  CHECK(r.err.empty());

  const CliResult f = run_cli({"count", "maps", "--n", "6", "--float"});
  CHECK(f.code == 0);
  CHECK(f.out.find("24057 ~ ") == 0);
}

TEST_CASE("machine format emits json") {
  const CliResult r =
      run_cli({"--format", "machine", "count", "maps", "--n", "6"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "count-maps");
  CHECK(j["n"] == 6);
  CHECK(j["value"] == "24057");
}

TEST_CASE("global flags work on either side of the subcommand") {
  const CliResult before = run_cli({"--float", "xi", "--ell", "2"});
  const CliResult after = run_cli({"xi", "--ell", "2", "--float"});
  CHECK(before.code == 0);
  CHECK(after.code == 0);
  CHECK(before.out == after.out);
  CHECK(before.out.find("7/108 ~ ") == 0);

  const CliResult fmt_after =
      run_cli({"count", "maps", "--n", "3", "--format", "machine"});
  CHECK(fmt_after.code == 0);
  CHECK(json::parse(fmt_after.out)["value"] == "54");
}

TEST_CASE("series output") {
  const CliResult r = run_cli({"series", "M", "--order", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("M n=0 1\n") != std::string::npos);
  CHECK(r.out.find("M n=4 378\n") != std::string::npos);

  const CliResult f =
      run_cli({"--format", "machine", "series", "F", "--ell", "4", "--order", "7"});
  CHECK(f.code == 0);
  const json j = json::parse(f.out);
  CHECK(j["command"] == "series-F");
  CHECK(j["coefficients"][4] == "1");
  CHECK(j["coefficients"][5] == "14");
  CHECK(j["coefficients"][7] == "1676");

  const CliResult m =
      run_cli({"--format", "machine", "series", "M", "--order", "2", "--u"});
  CHECK(m.code == 0);
  const json ju = json::parse(m.out);
  CHECK(ju["by_valency"] == true);
  CHECK(ju["rows"][1] == json::array({"0", "1", "1"}));
}

TEST_CASE("scalar laws") {
  CHECK(run_cli({"xi", "--ell", "2"}).out == "7/108\n");
  CHECK(run_cli({"pstar", "--k", "1"}).out == "1/12\n");

  const CliResult lp = run_cli({"local-prob", "--map",
                                data_file("m8.map").c_str()});
  CHECK(lp.code == 0);
  CHECK(lp.out.find("root-valency 4\n") != std::string::npos);
  CHECK(lp.out.find("local-prob 419/209952\n") != std::string::npos);
}

TEST_CASE("pattern report") {
  const CliResult r = run_cli({"--format", "machine", "pattern", "--map",
                               data_file("m8.map").c_str(), "--order", "8"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "pattern");
  CHECK(j["descriptor"]["root_valency"] == 4);
  CHECK(j["descriptor"]["inner_edges"] == 1);
  CHECK(j["descriptor"]["inner_valencies"] == json::array({3, 3}));
  CHECK(j["descriptor"]["rotations"] == 2);
  CHECK(j["root_occurrences"][5] == "1");
  CHECK(j["marked_occurrences"][5] == "2");
  CHECK(j["marked_occurrences"][6] == "42");
  CHECK(j["marked_occurrences"][7] == "632");
  CHECK(j["marked_occurrences"][8] == "8380");
  CHECK(j["tau"][0] == "29/26244");
  CHECK(j["tau"][1] == "-419/52488");
  CHECK(j["tau"][3] == "-61/972");
  CHECK(j["c1"] == "419/209952");
  CHECK(j["c2"] == "-6949/419904");
}

TEST_CASE("submap report") {
  const CliResult r = run_cli({"--format", "machine", "submap", "--map",
                               data_file("m8.map").c_str(), "--order", "8"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["command"] == "submap");
  CHECK(j["submap_occurrences"][6] == "78");
  CHECK(j["submap_occurrences"][8] == "35282");
  CHECK(j["rho"][0] == "118784/4782969");
  CHECK(j["rho"][1] == "-858112/4782969");
  CHECK(j["c1"] == "214528/4782969");
  CHECK(j["c2"] == "8037248/4782969");
}

TEST_CASE("oracle verification") {
  const CliResult r = run_cli({"oracle", "verify", "--map",
                               data_file("m8.map").c_str(), "--nmax", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS map-count n=5 = 2916\n") != std::string::npos);
  CHECK(r.out.find("PASS marked-pattern n=5 = 2\n") != std::string::npos);
  CHECK(r.out.find("PASS overall\n") != std::string::npos);

  const CliResult m = run_cli({"--format", "machine", "oracle", "verify",
                               "--map", data_file("m8.map").c_str(), "--nmax",
                               "3"});
  CHECK(m.code == 0);
  const json j = json::parse(m.out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() > 0);
  for (const json& c : j["checks"]) CHECK(c["pass"] == true);
  // Exit code 3 (a verification mismatch) is unreachable while the series
  // and the exhaustive search agree; the suites above pin that agreement.
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"count", "maps"}).code == 1);
  CHECK(run_cli({"count", "maps", "--n"}).code == 1);
  CHECK(run_cli({"xi"}).code == 1);
  CHECK(run_cli({"--format", "yaml", "count", "maps", "--n", "1"}).code == 1);

  const CliResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("invalid input exits 2") {
  const CliResult r = run_cli({"xi", "--ell", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") == 0);
  CHECK(run_cli({"local-prob", "--map", "/nonexistent.map"}).code == 2);
  CHECK(run_cli({"count", "maps", "--n", "-1"}).code == 2);
  // Order below the first possible occurrence.
  CHECK(run_cli({"pattern", "--map", data_file("m8.map").c_str(), "--order",
                 "3"})
            .code == 2);
}

TEST_CASE("enumeration limits exit 4") {
  const CliResult r = run_cli({"oracle", "verify", "--map",
                               data_file("m8.map").c_str(), "--nmax", "8"});
  CHECK(r.code == 4);
  CHECK(r.err.find("error:") == 0);
}
