#pragma once

#include <vector>

#include "mapcount/map.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/series.hpp"

namespace mapcount {

// Number of rooted planar maps with exactly n edges, as an exact integer
// value: 2 * 3^n * (2n)! / ((n+2)! n!).
Rational m_count(int n);

// Series of those counts to the given order, produced independently of
// m_count from the algebraic closed form (18z - 1 + (1-12z)^{3/2}) / (54 z^2).
Series m_series(int order);

// Bivariate count series: coefficient of z^n is a polynomial in u whose u^k
// coefficient counts n-edge maps with root-face valency k. Computed by
// fixed-point iteration of the root-edge decomposition; the result is cached
// per order and verified to be a true fixed point. Post: the z^0 coefficient
// is 1 and the z^n coefficient has u-degree <= 2n.
UZSeries M_bivariate(int order);

// Histogram of maps by edge count and root-face valency, read off the
// bivariate series. Construction validates that every entry is a
// non-negative integer and that each row sums to m_count(n).
class CountTable {
 public:
  explicit CountTable(int order);

  int order() const { return static_cast<int>(rows_.size()) - 1; }
  // m_{n,k}; zero for k beyond the row's degree. Pre: 0 <= n <= order().
  Rational count(int n, int k) const;
  Rational row_sum(int n) const;
  int max_valency(int n) const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

// Series counting maps whose root face is a simple ell-gon: ell distinct
// edges, ell distinct vertices. Equals z^ell / (ell-1)! times the (ell-1)-st
// u-derivative of the bivariate series at u = 1. Pre: ell >= 2
// (UnsupportedValency below) and order >= ell.
Series F_ell(int ell, int order);

// Probability that the face left of a uniform random corner in a huge map is
// a simple ell-gon: 12^-ell * sum_{j=0}^{ell-1} sum_{i=0}^{ell-1-j}
// C(ell, ell-1-i-j) C(-1/2, i) C(-3/2, j) 3^-i (-5)^j. Every call also
// recomputes the value from the singular expansion of F_ell and requires the
// two routes to agree. Pre: ell >= 2.
Rational xi(int ell);

// Probability that the root edge of a huge map lies on the outer boundary of
// a k-edge simple-face configuration; coefficient of u^k in
// u (1 + u/2)^{-1/2} (1 - 5u/6)^{-3/2} / 12. Pre: k >= 1.
Rational p_star(int k);

// Limit probability that a uniform random corner of a huge map is the root
// corner of an occurrence of the given pattern: xi(ell) * 12^{s-k} where k
// counts the pattern's strictly interior edges and s its root-face bridges.
Rational local_pattern_probability(const PatternDescriptor& d);
Rational local_pattern_probability(const CombinatorialMap& pattern);

}  // namespace mapcount
