#pragma once

#include "mapcount/map.hpp"
#include "mapcount/series.hpp"

namespace mapcount {

enum class OccurrenceKind {
  at_root,  // maps carrying an occurrence at the root corner
  pattern,  // maps with one marked pattern occurrence anywhere
  submap,   // maps with one marked submap occurrence anywhere
};

struct OccurrenceSeries {
  OccurrenceKind kind;
  PatternDescriptor descriptor;
  Series series;
};

// Maps with an occurrence of the pattern at the root corner, counted by
// total edge count: z^{k-s} F_ell for a pattern with ell-valent root face,
// k interior edges and s root-face bridges. Coefficients are non-negative
// integers. Pre: ell >= 2 (UnsupportedValency) and
// order >= max(0, k-s) + ell (invalid_argument).
OccurrenceSeries F_pattern(const PatternDescriptor& d, int order);
OccurrenceSeries F_pattern(const CombinatorialMap& pattern, int order);

// Maps with one marked occurrence of the pattern anywhere, up to the
// pattern's rotational symmetry: coefficient n is (2n - I) f_n / R with f
// the root-occurrence series, I the inner valency sum, R the rotational
// multiplicity. Division must be exact (NonIntegerCoefficient otherwise).
OccurrenceSeries T_pattern(const PatternDescriptor& d, int order);
OccurrenceSeries T_pattern(const CombinatorialMap& pattern, int order);

// Maps with one marked submap occurrence: the marked-pattern series times
// z^{-w} F_w for every inner valency w, which frees each inner face to hold
// an arbitrary map with a simple w-gon boundary. Pre: as T_pattern, and
// every inner valency >= 2 (UnsupportedValency). Post: coefficients
// dominate the marked-pattern coefficients termwise.
OccurrenceSeries S_submap(const PatternDescriptor& d, int order);
OccurrenceSeries S_submap(const CombinatorialMap& pattern, int order);

}  // namespace mapcount
