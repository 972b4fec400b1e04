#pragma once

#include <string>
#include <string_view>

#include "mapcount/map.hpp"

namespace mapcount {

// Text format for rooted maps. Tokens are separated by arbitrary whitespace
// and '#' starts a comment running to the end of the line. The E field comes
// first; alpha, sigma and root follow in any order, each exactly once:
//
//   E 5
//   alpha 1 0 3 2 5 4 7 6 9 8
//   sigma 8 2 1 4 9 6 5 0 7 3
//   root 0
//
// alpha and sigma list the image of each half-edge 0..2E-1 in index order.
// E 0 denotes the empty map (alpha and sigma carry no values, root is 0).
// Syntax problems raise ParseError; structural problems raise the map
// validation errors.
CombinatorialMap parse_map(std::string_view text);
CombinatorialMap read_map_file(const std::string& path);
std::string serialize_map(const CombinatorialMap& m);

}  // namespace mapcount
