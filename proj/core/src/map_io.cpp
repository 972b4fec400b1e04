#include "mapcount/map_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mapcount/errors.hpp"

namespace mapcount {
namespace {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    bool in_comment = false;
    for (char c : text) {
        if (c == '\n') in_comment = false;
        if (in_comment) continue;
        if (c == '#') {
            in_comment = true;
            c = ' ';
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

int parse_int(const std::string& tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(std::string("expected an integer for ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace

CombinatorialMap parse_map(std::string_view text) {
    const std::vector<std::string> tokens = tokenize(text);
    std::size_t pos = 0;
    auto next = [&](const char* what) -> const std::string& {
        if (pos >= tokens.size())
            throw ParseError(std::string("unexpected end of input while reading ") + what);
        return tokens[pos++];
    };

    if (tokens.empty()) throw ParseError("empty map description");
    if (next("E") != "E") throw ParseError("map description must start with the E field");
    const int edge_count = parse_int(next("E"), "E");
    if (edge_count < 0) throw ParseError("E must be non-negative");
    const std::size_t n = 2 * static_cast<std::size_t>(edge_count);

    std::vector<int> alpha, sigma;
    int root = -1;
    bool have_alpha = false, have_sigma = false, have_root = false;
    while (pos < tokens.size()) {
        const std::string& field = next("field name");
        if (field == "alpha" || field == "sigma") {
            bool& seen = field == "alpha" ? have_alpha : have_sigma;
            if (seen) throw ParseError("duplicate field '" + field + "'");
            seen = true;
            std::vector<int>& target = field == "alpha" ? alpha : sigma;
            target.reserve(n);
            for (std::size_t i = 0; i < n; ++i) target.push_back(parse_int(next(field.c_str()), field.c_str()));
        } else if (field == "root") {
            if (have_root) throw ParseError("duplicate field 'root'");
            have_root = true;
            root = parse_int(next("root"), "root");
        } else {
            throw ParseError("unknown field '" + field + "'");
        }
    }
    if (!have_alpha) throw ParseError("missing field 'alpha'");
    if (!have_sigma) throw ParseError("missing field 'sigma'");
    if (!have_root) throw ParseError("missing field 'root'");

    if (edge_count == 0) {
        if (root != 0) throw ParseError("the empty map requires root 0");
        return CombinatorialMap::empty_map();
    }
    return CombinatorialMap::validated(std::move(alpha), std::move(sigma), root);
}

CombinatorialMap read_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_map(buffer.str());
}

std::string serialize_map(const CombinatorialMap& m) {
    std::ostringstream out;
    out << "E " << m.edge_count() << "\n";
    out << "alpha";
    for (int h = 0; h < m.half_edge_count(); ++h) out << ' ' << m.alpha(h);
    out << "\nsigma";
    for (int h = 0; h < m.half_edge_count(); ++h) out << ' ' << m.sigma(h);
    // The empty map carries no half-edges; the format still records root 0.
    out << "\nroot " << (m.is_empty() ? 0 : m.root()) << "\n";
    return out.str();
}

}  // namespace mapcount
