#pragma once

#include <string>
#include <vector>

#include "mapcount/map.hpp"
#include "mapcount/rational.hpp"

namespace mapcount {

// Exhaustive enumeration of rooted planar maps with a fixed edge count,
// deduplicated by canonical code. Everything here is independent of the
// generating-series modules so the two sides can check each other.
struct EnumerationResult {
  int n = 0;
  // One representative per rooted isomorphism class, in canonical relabeling
  // (root half-edge 0), sorted by canonical code.
  std::vector<CombinatorialMap> maps;
  Rational map_count;
  // Index k: maps whose root face has valency k.
  std::vector<Rational> valency_histogram;
  // Index l: maps whose root face is a simple l-gon (l distinct edges and
  // l distinct vertices).
  std::vector<Rational> pure_gon_counts;
};

// All rooted planar maps with n edges, by exhaustive search over vertex
// rotations with a fixed half-edge pairing. Results are cached for the
// process; if the environment variable MAPCOUNT_ENUM_CACHE names a
// directory, results are also persisted there and reused. Pre: 0 <= n <= 6,
// or n = 7 with allow_slow (SizeLimitExceeded otherwise; n = 7 takes tens
// of minutes).
const EnumerationResult& enumerate_maps(int n, bool allow_slow = false);

// Number of n-edge maps whose root face is a simple ell-gon.
long long count_pure_gon(int n, int ell, bool allow_slow = false);

// Number of (map, marked occurrence) pairs over all n-edge maps: an
// occurrence is an edge subset whose inherited rotation structure is
// isomorphic to the pattern under some rooting, such that every face of the
// copy other than its root face is an actual face of the host and not the
// host's root face. Occurrences differing by a rotational symmetry of the
// pattern are identified. Pre: pattern non-empty, n within enumerate_maps
// range.
long long count_marked_patterns(const CombinatorialMap& pattern, int n,
                                bool allow_slow = false);

// Same, under the weaker submap containment: faces of the copy may hold
// further material, but the host's root face must lie in the copy's root
// region. Pre: as count_marked_patterns.
long long count_marked_submaps(const CombinatorialMap& pattern, int n,
                               bool allow_slow = false);

// Plain-text persistence for enumeration results ("mapcount-enum v1"
// header, one map per line). Histograms are recomputed on read; read
// throws ParseError on any malformed content.
void write_enumeration_cache(const EnumerationResult& r,
                             const std::string& path);
EnumerationResult read_enumeration_cache(const std::string& path);

namespace detail {
// Uncached search, exposed for benchmarks and determinism tests.
EnumerationResult enumerate_uncached(int n);
}  // namespace detail

}  // namespace mapcount
