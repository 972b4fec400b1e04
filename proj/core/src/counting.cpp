#include "mapcount/counting.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "mapcount/errors.hpp"
#include "mapcount/singular.hpp"

namespace mapcount {

namespace {

// One application of the root-edge decomposition to a candidate bivariate
// series: W -> 1 + z u^2 W^2 + z u (W(z,1) - u W) / (1 - u). The division
// is exact per z-coefficient because the numerator vanishes at u = 1.
UZSeries decomposition_step(const UZSeries& w) {
  const int N = w.order();
  const UPoly u = UPoly::u_power(1);

  UZSeries quad = (w * w).scaled_u(UPoly::u_power(2));

  const Series at_one = w.at_u(1);
  UZSeries num(N);
  for (int n = 0; n <= N; ++n) num.set_coeff(n, UPoly(at_one.coeff(n)));
  num = num - w.scaled_u(u);
  UZSeries lin = divide_exact_u(num, UPoly(1) - u).scaled_u(u);

  UZSeries out = (quad + lin).shifted_up(1).truncated(N);
  out.set_coeff(0, out.coeff(0) + UPoly(1));
  return out;
}

}  // namespace

Rational m_count(int n) {
  if (n < 0) throw std::invalid_argument("edge count must be non-negative");
  const BigInt num = 2 * boost::multiprecision::pow(BigInt(3), n) * factorial(2 * n);
  const BigInt den = factorial(n + 2) * factorial(n);
  Rational r(num, den);
  if (!r.is_integer()) throw std::logic_error("map count is not an integer");
  return r;
}

Series m_series(int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const int work = order + 2;

  Series base(work);
  base.set_coeff(0, 1);
  base.set_coeff(1, -12);
  const Series three_half = base * sqrt_series(base);

  Series low(work);
  low.set_coeff(0, -1);
  low.set_coeff(1, 18);
  // The two lowest coefficients of 18z - 1 + (1-12z)^{3/2} cancel exactly.
  return (low + three_half).shifted_down(2).scaled(Rational(1, 54));
}

UZSeries M_bivariate(int order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");

  static std::mutex mu;
  static std::map<int, UZSeries> cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(order); it != cache.end()) return it->second;

  UZSeries w = UZSeries::constant(UPoly(1), order);
  // Coefficient z^n is exact after n applications; one more for margin.
  for (int i = 0; i <= order; ++i) w = decomposition_step(w);
  if (!(decomposition_step(w) == w))
    throw std::logic_error("root-edge decomposition did not reach a fixed point");

  if (!(w.coeff(0) == UPoly(1)))
    throw std::logic_error("bivariate series has a wrong constant term");
  for (int n = 0; n <= order; ++n)
    if (w.coeff(n).degree() > 2 * n)
      throw std::logic_error("root-face valency exceeds twice the edge count");

  return cache.emplace(order, std::move(w)).first->second;
}

CountTable::CountTable(int order) {
  const UZSeries w = M_bivariate(order);
  rows_.resize(order + 1);
  for (int n = 0; n <= order; ++n) {
    const UPoly& p = w.coeff(n);
    Rational sum;
    rows_[n].resize(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k) {
      const Rational v = p.coeff(k);
      if (!v.is_integer() || v.sign() < 0)
        throw std::logic_error("valency histogram entry is not a count");
      rows_[n][k] = v;
      sum += v;
    }
    if (!(sum == m_count(n)))
      throw std::logic_error("valency histogram row does not sum to the map count");
  }
}

Rational CountTable::count(int n, int k) const {
  const auto& row = rows_.at(n);
  if (k < 0 || k >= static_cast<int>(row.size())) return Rational();
  return row[k];
}

Rational CountTable::row_sum(int n) const {
  Rational sum;
  for (const Rational& v : rows_.at(n)) sum += v;
  return sum;
}

int CountTable::max_valency(int n) const {
  return static_cast<int>(rows_.at(n).size()) - 1;
}

Series F_ell(int ell, int order) {
  if (ell < 2)
    throw UnsupportedValency("simple-gon valency must be at least 2, got " +
                             std::to_string(ell));
  if (order < ell)
    throw std::invalid_argument("order must be at least the gon valency");

  UZSeries h = M_bivariate(order - ell).scaled_u(UPoly::u_power(ell - 1));
  for (int t = 1; t < ell; ++t) h = differentiate_u(h);
  return h.at_u(1).scaled(Rational(1, factorial(ell - 1))).shifted_up(ell);
}

Rational xi(int ell) {
  if (ell < 2)
    throw UnsupportedValency("simple-gon valency must be at least 2, got " +
                             std::to_string(ell));

  Rational sum;
  for (int j = 0; j <= ell - 1; ++j) {
    for (int i = 0; i <= ell - 1 - j; ++i) {
      sum += Rational(binomial(ell, ell - 1 - i - j)) *
             binomial(Rational(-1, 2), i) * binomial(Rational(-3, 2), j) *
             Rational(1, 3).pow(i) * Rational(-5).pow(j);
    }
  }
  const Rational value = sum * Rational(1, 12).pow(ell);

  // Independent route through the singular expansion of the simple-gon
  // series: the Z^3 coefficients must be proportional with the universal
  // ratio taken from the univariate expansion.
  const Rational via_kappa = kappa(ell, 3) / m1_singular(3).coeff(3);
  if (!(value == via_kappa))
    throw std::logic_error("simple-gon frequency routes disagree");
  return value;
}

Rational p_star(int k) {
  if (k < 1) throw std::invalid_argument("edge count must be at least 1");
  Rational sum;
  for (int i = 0; i + 1 <= k; ++i) {
    const int j = k - 1 - i;
    sum += binomial(Rational(-1, 2), i) * Rational(1, 2).pow(i) *
           binomial(Rational(-3, 2), j) * Rational(-5, 6).pow(j);
  }
  return sum * Rational(1, 12);
}

Rational local_pattern_probability(const PatternDescriptor& d) {
  if (d.ell < 2)
    throw UnsupportedValency("pattern root-face valency must be at least 2");
  return xi(d.ell) *
         Rational(1, 12).pow(d.inner_edges - d.outer_edges);
}

Rational local_pattern_probability(const CombinatorialMap& pattern) {
  return local_pattern_probability(pattern.descriptor());
}

}  // namespace mapcount
