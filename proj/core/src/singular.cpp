#include "mapcount/singular.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapcount/errors.hpp"

namespace mapcount {

namespace {

// Polynomial prefix as a series at the given truncation order.
Series vpoly(std::vector<Rational> cs, int order) {
  cs.resize(order + 1);
  return Series(std::move(cs));
}

// (1 - Z^2)^m truncated at the given order, m >= 0.
Series one_minus_sq_pow(int m, int order) {
  Series r(order);
  for (int p = 0; 2 * p <= order; ++p) {
    const BigInt b = binomial(m, p);
    if (b != 0) r.set_coeff(2 * p, p % 2 ? Rational(-b) : Rational(b));
  }
  return r;
}

// Solved coefficients of the bivariate series at the singularity, as series
// in v = u - 1. All entries share one truncation order and are rebuilt
// together whenever a caller needs more of either dimension.
struct SolvedCoefficients {
  std::mutex mu;
  int order = -1;
  std::vector<Series> a;
};

SolvedCoefficients& solved() {
  static SolvedCoefficients s;
  return s;
}

Series univariate_expansion(int order) {
  // (1/2 - (3/2) Z^2 + Z^3) * (8/3) / (1 - Z^2)^2; the substitution
  // z = (1 - Z^2)/12 turns the algebraic closed form into this ratio with
  // the radical appearing as the exact monomial Z^3.
  const Series num = vpoly({Rational(1, 2), 0, Rational(-3, 2), 1}, order);
  const Series den = one_minus_sq_pow(2, order).scaled(Rational(3, 8));
  return divide_exact(num, den);
}

// Extends the solved table to max_j coefficients at v-order p; call with the
// lock held. The whole chain is recomputed so every entry shares one order.
void ensure_locked(SolvedCoefficients& s, int max_j, int p) {
  const int keep_j = static_cast<int>(s.a.size()) - 1;
  if (s.order >= p && keep_j >= max_j) return;
  const int P = std::max(p, s.order);
  const int J = std::max(max_j, keep_j);

  // The constant coefficient solves the quadratic picked up by comparing
  // constant terms of the decomposition at the singularity: alpha q^2 +
  // beta q + gamma = 0 with the polynomials below in v. The correct branch
  // has value 4/3 at v = 0; dividing by 2 alpha (valuation 1) costs one
  // order, so the quadratic runs one order higher.
  const int W = P + 1;
  const Series alpha2 =
      vpoly({0, Rational(1, 12), Rational(1, 6), Rational(1, 12)}, W);
  const Series beta = vpoly({Rational(1, 12), Rational(-5, 6), Rational(1, 12)}, W);
  const Series gamma = vpoly({Rational(-1, 9), Rational(8, 9)}, W);

  const Series disc = beta * beta - alpha2.scaled(4) * gamma;
  const Series root = sqrt_series(disc);
  const Series twice_alpha = alpha2.scaled(2);

  std::vector<Series> a;
  a.reserve(J + 1);
  bool found = false;
  for (const Series& num : {root - beta, -root - beta}) {
    if (num.valuation() < 1) continue;
    Series q = divide_exact(num, twice_alpha);
    if (q.coeff(0) == Rational(4, 3)) {
      a.push_back(q.truncated(P));
      found = true;
      break;
    }
  }
  if (!found)
    throw BranchSelectionFailure(
        "no branch of the constant coefficient has value 4/3");

  // Higher coefficients solve linear equations A_j D = R_j. The univariate
  // expansion supplies the inhomogeneous data.
  const Series m1 = univariate_expansion(J + 2);
  const Series v_sq_third =
      vpoly({0, Rational(1, 6), Rational(1, 3), Rational(1, 6)}, P);
  const Series sq_twelfth =
      vpoly({Rational(1, 12), Rational(1, 6), Rational(1, 12)}, P);
  const Series v_sq_twelfth =
      vpoly({0, Rational(1, 12), Rational(1, 6), Rational(1, 12)}, P);
  const Series lin_twelfth = vpoly({Rational(1, 12), Rational(1, 12)}, P);

  const Series d = vpoly({0, -1}, P) + v_sq_third * a[0] + sq_twelfth;
  if (!(d.coeff(0) == Rational(1, 12)))
    throw std::logic_error("linear-system determinant has a wrong constant term");

  for (int j = 1; j <= J; ++j) {
    Series conv(P);  // sum over all splits two below, minus the pure ones
    for (int q = 0; q <= j - 2; ++q) conv = conv + a[q] * a[j - 2 - q];
    for (int q = 1; q <= j - 1; ++q) conv = conv - a[q] * a[j - q];
    Series rhs = v_sq_twelfth * conv +
                 lin_twelfth.scaled(m1.coeff(j) - (j >= 2 ? m1.coeff(j - 2)
                                                          : Rational()));
    if (j >= 2) rhs = rhs + sq_twelfth * a[j - 2];
    a.push_back(divide_exact(rhs, d));
  }

  s.order = P;
  s.a = std::move(a);
}

}  // namespace

PuiseuxExpansion m1_singular(int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  return PuiseuxExpansion(univariate_expansion(order));
}

Series a_coeff(int i, int order_v) {
  if (i < 0 || order_v < 0)
    throw std::invalid_argument("expansion indices must be non-negative");
  auto& s = solved();
  std::scoped_lock lock(s.mu);
  ensure_locked(s, i, order_v);
  return s.a[i].truncated(order_v);
}

Rational kappa(int ell, int i) {
  if (ell < 2)
    throw UnsupportedValency("simple-gon valency must be at least 2, got " +
                             std::to_string(ell));
  if (i < 0) throw std::invalid_argument("expansion index must be non-negative");

  // Coefficient of v^{ell-1} in (1+v)^{ell-1} a_coeff(j).
  const auto top = [ell](const Series& aj) {
    Rational g;
    for (int t = 0; t <= ell - 1; ++t)
      g += Rational(binomial(ell - 1, t)) * aj.coeff(ell - 1 - t);
    return g;
  };

  Rational sum;
  for (int p = 0; 2 * p <= i; ++p) {
    const BigInt b = binomial(ell, p);
    if (b == 0) continue;
    const Rational g = top(a_coeff(i - 2 * p, ell - 1));
    sum += (p % 2 ? Rational(-b) : Rational(b)) * g;
  }
  return sum * Rational(1, 12).pow(ell);
}

PuiseuxExpansion f_ell_singular(int ell, int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  Series out(order);
  for (int i = 0; i <= order; ++i) out.set_coeff(i, kappa(ell, i));
  return PuiseuxExpansion(std::move(out));
}

PuiseuxExpansion singular_T(const PatternDescriptor& d, int max_i) {
  if (max_i < 0) throw std::invalid_argument("order must be non-negative");
  if (d.ell < 2)
    throw UnsupportedValency("pattern root-face valency must be at least 2");

  const int shift = d.inner_edges - d.outer_edges;
  const int ord = max_i + 2;
  Series kt = f_ell_singular(d.ell, ord).as_series();
  if (shift >= 0)
    kt = kt * one_minus_sq_pow(shift, ord);
  else
    kt = divide_exact(kt, one_minus_sq_pow(-shift, ord));
  kt = kt.scaled(Rational(1, 12).pow(shift));

  Series out(max_i);
  const Rational r_inv(1, d.rotational_count);
  for (int i = 0; i <= max_i; ++i)
    out.set_coeff(i, (Rational(i - d.inner_valency_sum) * kt.coeff(i) -
                      Rational(i + 2) * kt.coeff(i + 2)) *
                         r_inv);
  return PuiseuxExpansion(std::move(out));
}

PuiseuxExpansion singular_T(const CombinatorialMap& pattern, int max_i) {
  return singular_T(pattern.descriptor(), max_i);
}

PuiseuxExpansion singular_S(const PatternDescriptor& d, int max_i) {
  const PuiseuxExpansion t = singular_T(d, max_i);
  Series s = t.as_series();
  for (int w : d.inner_valencies) {
    if (w < 2)
      throw UnsupportedValency("inner face valency must be at least 2, got " +
                               std::to_string(w));
    const Series fw = f_ell_singular(w, max_i).as_series();
    s = s * divide_exact(fw.scaled(Rational(12).pow(w)),
                         one_minus_sq_pow(w, max_i));
  }

  if (max_i >= 1) {
    // The odd part of every inner-face factor starts at Z^3, so the Z^1
    // coefficient only picks up the constant factors.
    Rational q0(1);
    for (int w : d.inner_valencies) q0 *= Rational(12).pow(w) * kappa(w, 0);
    if (!(s.coeff(1) == t.coeff(1) * q0))
      throw std::logic_error("submap expansion breaks the Z^1 product identity");
  }
  return PuiseuxExpansion(std::move(s));
}

PuiseuxExpansion singular_S(const CombinatorialMap& pattern, int max_i) {
  return singular_S(pattern.descriptor(), max_i);
}

namespace {

ExpectationLaw law_from(const PuiseuxExpansion& e) {
  return ExpectationLaw{
      e.coeff(1) * Rational(-1, 4),
      (Rational(3) * e.coeff(3) - Rational(7) * e.coeff(1)) * Rational(1, 8)};
}

}  // namespace

ExpectationLaw expectation_pattern(const PatternDescriptor& d) {
  return law_from(singular_T(d, 3));
}

ExpectationLaw expectation_pattern(const CombinatorialMap& pattern) {
  return expectation_pattern(pattern.descriptor());
}

ExpectationLaw expectation_submap(const PatternDescriptor& d) {
  return law_from(singular_S(d, 3));
}

ExpectationLaw expectation_submap(const CombinatorialMap& pattern) {
  return expectation_submap(pattern.descriptor());
}

double transfer_term(const Rational& c, int i, long long n, bool correction) {
  if (n < 1) throw std::invalid_argument("index must be positive");
  if (i >= 0 && i % 2 == 0) return 0.0;  // polynomial part, no tail
  const double half = i / 2.0;
  double x = c.to_double() / std::tgamma(-half) * std::pow(double(n), -half - 1.0);
  if (correction) x *= 1.0 + half * (half + 1.0) / (2.0 * n);
  return x;
}

double transfer_asymptotic(const PuiseuxExpansion& e, long long n) {
  if (n < 1) throw std::invalid_argument("index must be positive");
  if (e.order() < 5)
    throw InsufficientOrder("need the singular expansion through Z^5");

  int lead = -1;
  for (int i = 1; i <= e.order(); i += 2) {
    if (!e.coeff(i).is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead < 0) return 0.0;

  double val = transfer_term(e.coeff(lead), lead, n, true);
  if (lead + 2 <= e.order())
    val += transfer_term(e.coeff(lead + 2), lead + 2, n, false);
  return std::pow(12.0, double(n)) * val;
}

}  // namespace mapcount
