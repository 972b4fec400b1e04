#include "mapcount/occurrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mapcount/counting.hpp"
#include "mapcount/errors.hpp"

namespace mapcount {

namespace {

void require_counts(const Series& s, const char* what) {
  for (int n = 0; n <= s.order(); ++n) {
    const Rational& c = s.coeff(n);
    if (!c.is_integer() || c.sign() < 0)
      throw std::logic_error(std::string(what) + " coefficient is not a count");
  }
}

}  // namespace

OccurrenceSeries F_pattern(const PatternDescriptor& d, int order) {
  if (d.ell < 2)
    throw UnsupportedValency("pattern root-face valency must be at least 2");
  const int shift = d.inner_edges - d.outer_edges;
  if (order < std::max(0, shift) + d.ell)
    throw std::invalid_argument("order too small for the pattern's edge counts");

  Series f = F_ell(d.ell, order - shift);
  f = shift >= 0 ? f.shifted_up(shift) : f.shifted_down(-shift);
  require_counts(f, "root-occurrence");
  return OccurrenceSeries{OccurrenceKind::at_root, d, std::move(f)};
}

OccurrenceSeries F_pattern(const CombinatorialMap& pattern, int order) {
  return F_pattern(pattern.descriptor(), order);
}

OccurrenceSeries T_pattern(const PatternDescriptor& d, int order) {
  const OccurrenceSeries base = F_pattern(d, order);
  Series t(order);
  for (int n = 0; n <= order; ++n) {
    const Rational q = Rational(2 * n - d.inner_valency_sum) *
                       base.series.coeff(n) *
                       Rational(1, d.rotational_count);
    if (!q.is_integer())
      throw NonIntegerCoefficient("marked-occurrence count at n = " +
                                  std::to_string(n) + " is " + q.str());
    if (q.sign() < 0)
      throw std::logic_error("marked-occurrence count is negative");
    t.set_coeff(n, q);
  }
  return OccurrenceSeries{OccurrenceKind::pattern, d, std::move(t)};
}

OccurrenceSeries T_pattern(const CombinatorialMap& pattern, int order) {
  return T_pattern(pattern.descriptor(), order);
}

OccurrenceSeries S_submap(const PatternDescriptor& d, int order) {
  for (int w : d.inner_valencies)
    if (w < 2)
      throw UnsupportedValency("inner face valency must be at least 2, got " +
                               std::to_string(w));

  const OccurrenceSeries marked = T_pattern(d, order);
  Series s = marked.series;
  for (int w : d.inner_valencies) {
    // Replacing an inner w-gon face by an arbitrary map with a simple w-gon
    // root face multiplies by F_w normalized to constant term 1.
    s = s * F_ell(w, order + w).shifted_down(w);
  }
  require_counts(s, "marked-submap");
  for (int n = 0; n <= order; ++n)
    if (s.coeff(n) < marked.series.coeff(n))
      throw std::logic_error("submap counts fall below pattern counts");
  return OccurrenceSeries{OccurrenceKind::submap, d, std::move(s)};
}

OccurrenceSeries S_submap(const CombinatorialMap& pattern, int order) {
  return S_submap(pattern.descriptor(), order);
}

}  // namespace mapcount
