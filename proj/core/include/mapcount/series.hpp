#pragma once

#include <vector>

#include "mapcount/rational.hpp"

namespace mapcount {

// Dense truncated power series with exact rational coefficients. A value of
// order N carries the coefficients of z^0..z^N; arithmetic between operands
// of different orders truncates to the smaller one and never silently
// extends. The same type serves series in z and series in v = u - 1.
class Series {
 public:
  // Zero series of the given truncation order (order >= 0).
  explicit Series(int order);
  // Coefficients z^0.. ; order = coeffs.size() - 1.
  explicit Series(std::vector<Rational> coeffs);

  static Series constant(const Rational& v, int order);
  // v * z^k, exact as a polynomial up to the given order (k <= order).
  static Series monomial(const Rational& v, int k, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int n) const;
  void set_coeff(int n, const Rational& v);

  bool is_zero() const;
  // Index of the first nonzero coefficient; order() + 1 if all are zero.
  int valuation() const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series scaled(const Rational& s) const;

  // Restriction to a smaller order (new_order <= order()).
  Series truncated(int new_order) const;
  // Zero-padding to a larger order. Only meaningful when the value is an
  // exact polynomial, e.g. a divisor or factor known in closed form.
  Series extended(int new_order) const;
  // Multiplication by z^k; the result is exact to order() + k.
  Series shifted_up(int k) const;
  // Division by z^k; the k low coefficients must vanish (NonzeroRemainder).
  Series shifted_down(int k) const;

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Rational> c_;
};

// Quotient q with q * b = a to the common truncation. The valuation v of b
// must be matched by zero low-order coefficients of a (NonzeroRemainder
// otherwise); the result has order min(a.order, b.order) - v.
Series divide_exact(const Series& a, const Series& b);

// Square root by quadratically convergent Newton refinement. The constant
// term must be a positive square of a rational (NotASquareConstant).
Series sqrt_series(const Series& f);

// d/dz; the order drops by one (input order must be >= 1).
Series differentiate(const Series& f);

// Polynomial in u with exact rational coefficients, trailing zeros trimmed.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& constant);
  UPoly(long long constant) : UPoly(Rational(constant)) {}
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly u_power(int k);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int k) const;
  Rational eval(const Rational& x) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& s) const;
  UPoly derivative() const;

  friend bool operator==(const UPoly& a, const UPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Exact polynomial quotient; throws NonzeroRemainder unless b divides a.
UPoly divide_exact(const UPoly& a, const UPoly& b);

// Truncated series in z whose coefficients are polynomials in u.
class UZSeries {
 public:
  explicit UZSeries(int order);
  static UZSeries constant(const UPoly& p, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const UPoly& coeff(int n) const;
  void set_coeff(int n, const UPoly& p);
  int max_u_degree() const;

  UZSeries operator-() const;
  friend UZSeries operator+(const UZSeries& a, const UZSeries& b);
  friend UZSeries operator-(const UZSeries& a, const UZSeries& b);
  friend UZSeries operator*(const UZSeries& a, const UZSeries& b);
  UZSeries scaled(const Rational& s) const;
  // Multiplication by a fixed polynomial in u.
  UZSeries scaled_u(const UPoly& p) const;
  UZSeries truncated(int new_order) const;
  UZSeries shifted_up(int k) const;

  Series at_u(const Rational& x) const;

  friend bool operator==(const UZSeries& a, const UZSeries& b) = default;

 private:
  std::vector<UPoly> c_;
};

// Coefficient-wise exact division by a polynomial in u.
UZSeries divide_exact_u(const UZSeries& a, const UPoly& b);
// Coefficient-wise d/du; the z-order is unchanged.
UZSeries differentiate_u(const UZSeries& f);

}  // namespace mapcount
