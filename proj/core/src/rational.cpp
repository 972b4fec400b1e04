#include "mapcount/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace mapcount {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den < 0)
    q_ = mp::cpp_rational(BigInt(-num), BigInt(-den));
  else
    q_ = mp::cpp_rational(num, den);
}

BigInt Rational::as_integer() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  return numerator();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

double Rational::to_double() const {
  if (is_zero()) return 0.0;
  BigInt n = numerator();
  BigInt d = denominator();
  const bool neg = n < 0;
  if (neg) n = -n;
  // Truncate both parts to ~80 significant bits so the double division is
  // safe for arbitrarily large values; the exponent goes through ldexp.
  const long nb = static_cast<long>(mp::msb(n));
  const long db = static_cast<long>(mp::msb(d));
  const long sn = nb > 80 ? nb - 80 : 0;
  const long sd = db > 80 ? db - 80 : 0;
  const double dn = BigInt(n >> sn).convert_to<double>();
  const double dd = BigInt(d >> sd).convert_to<double>();
  const double r = std::ldexp(dn / dd, static_cast<int>(sn - sd));
  return neg ? -r : r;
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  };
  const auto digits = [&](std::string_view s) {
    if (s.empty()) bad();
    for (char c : s)
      if (c < '0' || c > '9') bad();
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_body = num;
  if (!num_body.empty() && (num_body[0] == '-' || num_body[0] == '+'))
    num_body.remove_prefix(1);
  digits(num_body);
  digits(den);
  BigInt n{std::string(num_body)};
  if (!num.empty() && num[0] == '-') n = -n;
  return Rational(n, BigInt(std::string(den)));
}

std::optional<Rational> Rational::exact_sqrt(const Rational& v) {
  if (v.sign() < 0) return std::nullopt;
  const BigInt n = v.numerator();
  const BigInt d = v.denominator();
  const BigInt rn = mp::sqrt(n);
  const BigInt rd = mp::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

Rational Rational::pow(long long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("zero to a negative power");
    return Rational(1) / pow(-e);
  }
  Rational base = *this;
  Rational acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

Rational binomial(const Rational& r, int k) {
  if (k < 0) return 0;
  Rational acc = 1;
  for (int i = 0; i < k; ++i) acc *= (r - Rational(i)) / Rational(i + 1);
  return acc;
}

}  // namespace mapcount
