#pragma once

#include "mapcount/map.hpp"
#include "mapcount/rational.hpp"
#include "mapcount/series.hpp"

namespace mapcount {

// Expansion of a counting series around its dominant singularity z = 1/12 in
// the variable Z = sqrt(1 - 12z): coefficient i multiplies Z^i. Odd powers
// carry the singular part; even powers are analytic and contribute nothing
// to coefficient asymptotics.
class PuiseuxExpansion {
 public:
  explicit PuiseuxExpansion(Series coeffs) : c_(std::move(coeffs)) {}

  int order() const { return c_.order(); }
  const Rational& coeff(int i) const { return c_.coeff(i); }
  const Series& as_series() const { return c_; }

  friend bool operator==(const PuiseuxExpansion& a,
                         const PuiseuxExpansion& b) = default;

 private:
  Series c_;
};

// Expansion of the univariate map series at the singularity:
// (1/2 - (3/2) Z^2 + Z^3) * (8/3) / (1 - Z^2)^2 = 4/3 - (4/3) Z^2 + (8/3) Z^3 - ...
PuiseuxExpansion m1_singular(int order);

// Coefficient of Z^i in the bivariate map series expanded at the singularity,
// as a series in v = u - 1 to the given order. Z^0 solves a quadratic picked
// by the branch with value 4/3 at v = 0 (BranchSelectionFailure if neither
// root matches); higher coefficients solve linear equations whose system
// determinant is 1/12 at v = 0. Pre: i >= 0, order_v >= 0.
Series a_coeff(int i, int order_v);

// Coefficient of Z^i in the singular expansion of the simple-ell-gon series
// F_ell: 12^-ell * sum_p (-1)^p C(ell, p) G_{ell, i-2p} where G_{ell, j} is
// the coefficient of v^{ell-1} in (1+v)^{ell-1} a_coeff(j). Pre: ell >= 2
// (UnsupportedValency otherwise), i >= 0. Post: kappa(ell, 1) == 0.
Rational kappa(int ell, int i);

// Singular expansion of F_ell to the given order in Z.
PuiseuxExpansion f_ell_singular(int ell, int order);

// Singular expansion of the series counting maps with a marked occurrence of
// a pattern with the given descriptor: coefficient i equals
// ((i - I) k~_i - (i+2) k~_{i+2}) / R where k~ is the expansion of
// 12^{s-k} (1-Z^2)^{k-s} F_ell, I the inner valency sum, R the rotational
// multiplicity. Pre: ell >= 2.
PuiseuxExpansion singular_T(const PatternDescriptor& d, int max_i);
PuiseuxExpansion singular_T(const CombinatorialMap& pattern, int max_i);

// Singular expansion of the series counting maps with a marked submap
// occurrence: the marked-pattern expansion times, for every inner valency w,
// the factor 12^w (1-Z^2)^{-w} * (singular expansion of F_w). Pre: every
// inner valency >= 2 (UnsupportedValency otherwise). Post: coefficient 1
// equals coefficient 1 of the pattern expansion times prod_w 12^w kappa(w, 0).
PuiseuxExpansion singular_S(const PatternDescriptor& d, int max_i);
PuiseuxExpansion singular_S(const CombinatorialMap& pattern, int max_i);

// Leading behaviour of the expected number of occurrences per n-edge map:
// c1 * n + c2 + O(1/n).
struct ExpectationLaw {
  Rational c1;
  Rational c2;
};

// c1 = -e_1/4, c2 = (3 e_3 - 7 e_1)/8 for an occurrence expansion with
// coefficients e_i; pattern uses the marked-pattern expansion, submap the
// marked-submap one.
ExpectationLaw expectation_pattern(const PatternDescriptor& d);
ExpectationLaw expectation_pattern(const CombinatorialMap& pattern);
ExpectationLaw expectation_submap(const PatternDescriptor& d);
ExpectationLaw expectation_submap(const CombinatorialMap& pattern);

// Contribution of a term c * (1-z)^{i/2} to the z^n coefficient:
// c * n^{-i/2-1} / Gamma(-i/2), optionally with the second-order factor
// (1 + (i/2)(i/2+1)/(2n)). Zero when i is a non-negative even integer
// (polynomial terms have no tail). Radius-free: no 12^n growth factor.
double transfer_term(const Rational& c, int i, long long n, bool correction);

// Two-term asymptotic for the z^n coefficient of a series with the given
// singular expansion: 12^n times the dominant odd term with its second-order
// correction plus the next odd term. Pre: order >= 5 (InsufficientOrder),
// n >= 1. The 12^n factor overflows double near n = 285.
double transfer_asymptotic(const PuiseuxExpansion& e, long long n);

}  // namespace mapcount
