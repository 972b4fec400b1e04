#include "mapcount/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mapcount/counting.hpp"
#include "mapcount/errors.hpp"
#include "mapcount/map.hpp"
#include "mapcount/map_io.hpp"
#include "mapcount/occurrence.hpp"
#include "mapcount/oracle.hpp"
#include "mapcount/singular.hpp"

namespace mapcount::cli {

namespace {

using nlohmann::ordered_json;

struct Format {
  bool machine = false;
  bool approx = false;
};

void emit(std::ostream& out, const ordered_json& j) {
  out << j.dump(2) << "\n";
}

void plain_value(std::ostream& out, const Rational& v, const Format& fmt) {
  out << v.str();
  if (fmt.approx) out << " ~ " << v.to_double();
  out << "\n";
}

ordered_json series_values(const Series& s) {
  ordered_json a = ordered_json::array();
  for (int n = 0; n <= s.order(); ++n) a.push_back(s.coeff(n).str());
  return a;
}

ordered_json series_approx(const Series& s) {
  ordered_json a = ordered_json::array();
  for (int n = 0; n <= s.order(); ++n) a.push_back(s.coeff(n).to_double());
  return a;
}

void plain_series(std::ostream& out, const char* label, const Series& s,
                  const Format& fmt) {
  for (int n = 0; n <= s.order(); ++n) {
    out << label << " n=" << n << " " << s.coeff(n).str();
    if (fmt.approx) out << " ~ " << s.coeff(n).to_double();
    out << "\n";
  }
}

ordered_json descriptor_json(const PatternDescriptor& d) {
  ordered_json j;
  j["root_valency"] = d.ell;
  j["inner_edges"] = d.inner_edges;
  j["outer_bridges"] = d.outer_edges;
  j["inner_valencies"] = d.inner_valencies;
  j["inner_valency_sum"] = d.inner_valency_sum;
  j["rotations"] = d.rotational_count;
  return j;
}

void plain_descriptor(std::ostream& out, const PatternDescriptor& d) {
  out << "root-valency " << d.ell << "\n";
  out << "inner-edges " << d.inner_edges << "\n";
  out << "outer-bridges " << d.outer_edges << "\n";
  out << "inner-valencies";
  for (int w : d.inner_valencies) out << " " << w;
  out << "\n";
  out << "inner-valency-sum " << d.inner_valency_sum << "\n";
  out << "rotations " << d.rotational_count << "\n";
}

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

std::vector<Check> verify_checks(const CombinatorialMap& pattern, int nmax,
                                 bool slow) {
  std::vector<Check> cs;
  const auto add = [&cs](std::string name, std::string expected,
                         std::string got) {
    const bool pass = expected == got;
    cs.push_back({std::move(name), std::move(expected), std::move(got), pass});
  };

  for (int n = 0; n <= nmax; ++n)
    add("map-count n=" + std::to_string(n), m_count(n).str(),
        enumerate_maps(n, slow).map_count.str());

  const CountTable table(nmax);
  for (int n = 0; n <= nmax; ++n) {
    const auto& hist = enumerate_maps(n, slow).valency_histogram;
    for (int k = 0; k <= 2 * n; ++k) {
      const Rational got =
          k < static_cast<int>(hist.size()) ? hist[k] : Rational();
      add("valency n=" + std::to_string(n) + " k=" + std::to_string(k),
          table.count(n, k).str(), got.str());
    }
  }

  for (int ell = 2; ell <= std::min(5, nmax); ++ell) {
    const Series f = F_ell(ell, nmax);
    for (int n = 0; n <= nmax; ++n)
      add("simple-gon l=" + std::to_string(ell) + " n=" + std::to_string(n),
          f.coeff(n).str(), std::to_string(count_pure_gon(n, ell, slow)));
  }

  const PatternDescriptor d = pattern.descriptor();
  const int min_order =
      std::max(0, d.inner_edges - d.outer_edges) + d.ell;
  const int order = std::max(nmax, min_order);
  const Series t = T_pattern(d, order).series;
  const Series s = S_submap(d, order).series;
  for (int n = 0; n <= nmax; ++n)
    add("marked-pattern n=" + std::to_string(n), t.coeff(n).str(),
        std::to_string(count_marked_patterns(pattern, n, slow)));
  for (int n = 0; n <= nmax; ++n)
    add("marked-submap n=" + std::to_string(n), s.coeff(n).str(),
        std::to_string(count_marked_submaps(pattern, n, slow)));
  return cs;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact counting of patterns and submaps in rooted planar maps"};
  app.require_subcommand(1);

  std::string format = "plain";
  Format fmt;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "machine"}))
      ->capture_default_str();
  app.add_flag("--float", fmt.approx, "Also print decimal approximations");

  int arg_n = 0, arg_order = 0, arg_ell = 0, arg_k = 0, arg_nmax = 6;
  bool arg_u = false, arg_slow = false;
  std::string arg_map;

  CLI::App* count = app.add_subcommand("count", "Exact counts");
  count->require_subcommand(1);
  CLI::App* count_maps =
      count->add_subcommand("maps", "Number of rooted planar maps with n edges");
  count_maps->add_option("--n", arg_n, "Edge count")->required();

  CLI::App* series = app.add_subcommand("series", "Counting series");
  series->require_subcommand(1);
  CLI::App* series_m =
      series->add_subcommand("M", "Map counts by edge count");
  series_m->add_option("--order", arg_order, "Truncation order")->required();
  series_m->add_flag("--u", arg_u, "Refine by root-face valency");
  CLI::App* series_f = series->add_subcommand(
      "F", "Maps whose root face is a simple ell-gon");
  series_f->add_option("--ell", arg_ell, "Root-face valency")->required();
  series_f->add_option("--order", arg_order, "Truncation order")->required();

  CLI::App* cmd_xi = app.add_subcommand(
      "xi", "Limit frequency of simple ell-gon faces at a random corner");
  cmd_xi->add_option("--ell", arg_ell, "Face valency")->required();

  CLI::App* cmd_pstar = app.add_subcommand(
      "pstar", "Limit law of the root face-configuration size");
  cmd_pstar->add_option("--k", arg_k, "Edge count")->required();

  CLI::App* cmd_local = app.add_subcommand(
      "local-prob", "Limit probability of a pattern occurrence at a corner");
  cmd_local->add_option("--map", arg_map, "Pattern map file")->required();

  CLI::App* cmd_pattern = app.add_subcommand(
      "pattern", "Occurrence series and expectation for a pattern");
  cmd_pattern->add_option("--map", arg_map, "Pattern map file")->required();
  cmd_pattern->add_option("--order", arg_order, "Truncation order")->required();

  CLI::App* cmd_submap = app.add_subcommand(
      "submap", "Occurrence series and expectation for submap containment");
  cmd_submap->add_option("--map", arg_map, "Pattern map file")->required();
  cmd_submap->add_option("--order", arg_order, "Truncation order")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive cross-checks");
  oracle->require_subcommand(1);
  CLI::App* verify = oracle->add_subcommand(
      "verify", "Compare series predictions against exhaustive enumeration");
  verify->add_option("--map", arg_map, "Pattern map file")->required();
  verify->add_option("--nmax", arg_nmax, "Largest edge count to enumerate")
      ->capture_default_str();
  verify->add_flag("--slow", arg_slow, "Allow the slow n = 7 enumeration");

  // let --format / --float appear after the subcommand too
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands(nullptr)) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }
  fmt.machine = format == "machine";

  try {
    if (*count_maps) {
      const Rational v = m_count(arg_n);
      if (fmt.machine) {
        ordered_json j;
        j["command"] = "count-maps";
        j["n"] = arg_n;
        j["value"] = v.str();
        if (fmt.approx) j["approx"] = v.to_double();
        emit(out, j);
      } else {
        plain_value(out, v, fmt);
      }
    } else if (*series_m) {
      if (arg_u) {
        const UZSeries w = M_bivariate(arg_order);
        if (fmt.machine) {
          ordered_json rows = ordered_json::array();
          for (int n = 0; n <= arg_order; ++n) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k <= w.coeff(n).degree(); ++k)
              row.push_back(w.coeff(n).coeff(k).str());
            rows.push_back(std::move(row));
          }
          ordered_json j;
          j["command"] = "series-M";
          j["order"] = arg_order;
          j["by_valency"] = true;
          j["rows"] = std::move(rows);
          emit(out, j);
        } else {
          for (int n = 0; n <= arg_order; ++n) {
            out << "n=" << n;
            for (int k = 0; k <= w.coeff(n).degree(); ++k)
              out << " " << w.coeff(n).coeff(k).str();
            out << "\n";
          }
        }
      } else {
        const Series s = m_series(arg_order);
        if (fmt.machine) {
          ordered_json j;
          j["command"] = "series-M";
          j["order"] = arg_order;
          j["by_valency"] = false;
          j["coefficients"] = series_values(s);
          if (fmt.approx) j["approx"] = series_approx(s);
          emit(out, j);
        } else {
          plain_series(out, "M", s, fmt);
        }
      }
    } else if (*series_f) {
      const Series s = F_ell(arg_ell, arg_order);
      if (fmt.machine) {
        ordered_json j;
        j["command"] = "series-F";
        j["ell"] = arg_ell;
        j["order"] = arg_order;
        j["coefficients"] = series_values(s);
        if (fmt.approx) j["approx"] = series_approx(s);
        emit(out, j);
      } else {
        plain_series(out, "F", s, fmt);
      }
    } else if (*cmd_xi) {
      const Rational v = xi(arg_ell);
      if (fmt.machine) {
        ordered_json j;
        j["command"] = "xi";
        j["ell"] = arg_ell;
        j["value"] = v.str();
        if (fmt.approx) j["approx"] = v.to_double();
        emit(out, j);
      } else {
        plain_value(out, v, fmt);
      }
    } else if (*cmd_pstar) {
      const Rational v = p_star(arg_k);
      if (fmt.machine) {
        ordered_json j;
        j["command"] = "pstar";
        j["k"] = arg_k;
        j["value"] = v.str();
        if (fmt.approx) j["approx"] = v.to_double();
        emit(out, j);
      } else {
        plain_value(out, v, fmt);
      }
    } else if (*cmd_local) {
      const CombinatorialMap m = read_map_file(arg_map);
      const PatternDescriptor d = m.descriptor();
      const Rational v = local_pattern_probability(d);
      if (fmt.machine) {
        ordered_json j;
        j["command"] = "local-prob";
        j["map"] = arg_map;
        j["descriptor"] = descriptor_json(d);
        j["value"] = v.str();
        if (fmt.approx) j["approx"] = v.to_double();
        emit(out, j);
      } else {
        plain_descriptor(out, d);
        out << "local-prob ";
        plain_value(out, v, fmt);
      }
    } else if (*cmd_pattern) {
      const CombinatorialMap m = read_map_file(arg_map);
      const PatternDescriptor d = m.descriptor();
      const OccurrenceSeries f = F_pattern(d, arg_order);
      const OccurrenceSeries t = T_pattern(d, arg_order);
      const PuiseuxExpansion tau = singular_T(d, 5);
      const ExpectationLaw law = expectation_pattern(d);
      if (fmt.machine) {
        ordered_json j;
        j["command"] = "pattern";
        j["map"] = arg_map;
        j["order"] = arg_order;
        j["descriptor"] = descriptor_json(d);
        j["root_occurrences"] = series_values(f.series);
        j["marked_occurrences"] = series_values(t.series);
        j["tau"] = series_values(tau.as_series());
        j["c1"] = law.c1.str();
        j["c2"] = law.c2.str();
        if (fmt.approx) {
          j["c1_approx"] = law.c1.to_double();
          j["c2_approx"] = law.c2.to_double();
        }
        emit(out, j);
      } else {
        plain_descriptor(out, d);
        plain_series(out, "F", f.series, fmt);
        plain_series(out, "T", t.series, fmt);
        for (int i = 0; i <= tau.order(); ++i)
          out << "tau i=" << i << " " << tau.coeff(i).str() << "\n";
        out << "c1 ";
        plain_value(out, law.c1, fmt);
        out << "c2 ";
        plain_value(out, law.c2, fmt);
      }
    } else if (*cmd_submap) {
      const CombinatorialMap m = read_map_file(arg_map);
      const PatternDescriptor d = m.descriptor();
      const OccurrenceSeries s = S_submap(d, arg_order);
      const PuiseuxExpansion rho = singular_S(d, 5);
      const ExpectationLaw law = expectation_submap(d);
      if (fmt.machine) {
        ordered_json j;
        j["command"] = "submap";
        j["map"] = arg_map;
        j["order"] = arg_order;
        j["descriptor"] = descriptor_json(d);
        j["submap_occurrences"] = series_values(s.series);
        j["rho"] = series_values(rho.as_series());
        j["c1"] = law.c1.str();
        j["c2"] = law.c2.str();
        if (fmt.approx) {
          j["c1_approx"] = law.c1.to_double();
          j["c2_approx"] = law.c2.to_double();
        }
        emit(out, j);
      } else {
        plain_descriptor(out, d);
        plain_series(out, "S", s.series, fmt);
        for (int i = 0; i <= rho.order(); ++i)
          out << "rho i=" << i << " " << rho.coeff(i).str() << "\n";
        out << "c1 ";
        plain_value(out, law.c1, fmt);
        out << "c2 ";
        plain_value(out, law.c2, fmt);
      }
    } else if (*verify) {
      const CombinatorialMap m = read_map_file(arg_map);
      const std::vector<Check> cs = verify_checks(m, arg_nmax, arg_slow);
      const bool ok =
          std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.pass; });
      if (fmt.machine) {
        ordered_json checks = ordered_json::array();
        for (const Check& c : cs) {
          ordered_json jc;
          jc["name"] = c.name;
          jc["expected"] = c.expected;
          jc["got"] = c.got;
          jc["pass"] = c.pass;
          checks.push_back(std::move(jc));
        }
        ordered_json j;
        j["command"] = "verify";
        j["map"] = arg_map;
        j["nmax"] = arg_nmax;
        j["checks"] = std::move(checks);
        j["pass"] = ok;
        emit(out, j);
      } else {
        for (const Check& c : cs) {
          if (c.pass)
            out << "PASS " << c.name << " = " << c.got << "\n";
          else
            out << "FAIL " << c.name << " expected " << c.expected << " got "
                << c.got << "\n";
        }
        out << (ok ? "PASS" : "FAIL") << " overall\n";
      }
      if (!ok) return 3;
    }
    return 0;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv) {
  return run(argc, argv, std::cout, std::cerr);
}

}  // namespace mapcount::cli
