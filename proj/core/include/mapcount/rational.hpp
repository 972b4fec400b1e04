#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace mapcount {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number with arbitrary-precision integer parts.
// Always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : q_(n) {}
  Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(q_); }
  BigInt denominator() const { return boost::multiprecision::denominator(q_); }

  bool is_zero() const { return q_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  // Requires is_integer().
  BigInt as_integer() const;

  int sign() const { return q_.sign(); }
  double to_double() const;
  std::string str() const;

  // Accepts "p", "-p", "p/q" with an optional sign on p; q must be positive.
  static Rational parse(std::string_view text);

  // Exact square root if the value is a square of a rational, else nullopt.
  static std::optional<Rational> exact_sqrt(const Rational& v);

  // Integer power; negative exponents require a nonzero value.
  Rational pow(long long e) const;

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.q_ < b.q_) return std::strong_ordering::less;
    if (b.q_ < a.q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::cpp_rational q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n! for n >= 0.
BigInt factorial(int n);
// Binomial coefficient over the integers; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);
// Generalized binomial coefficient C(r, k) = r(r-1)...(r-k+1)/k!.
Rational binomial(const Rational& r, int k);

}  // namespace mapcount
