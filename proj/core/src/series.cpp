#include "mapcount/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mapcount/errors.hpp"

namespace mapcount {

namespace {

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
}

}  // namespace

Series::Series(int order) {
  check_order(order);
  c_.assign(static_cast<size_t>(order) + 1, Rational());
}

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("series needs a constant term");
}

Series Series::constant(const Rational& v, int order) {
  Series s(order);
  s.c_[0] = v;
  return s;
}

Series Series::monomial(const Rational& v, int k, int order) {
  Series s(order);
  if (k < 0 || k > order) throw std::invalid_argument("monomial degree out of range");
  s.c_[k] = v;
  return s;
}

const Rational& Series::coeff(int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
  return c_[n];
}

void Series::set_coeff(int n, const Rational& v) {
  if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
  c_[n] = v;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

int Series::valuation() const {
  for (int n = 0; n <= order(); ++n)
    if (!c_[n].is_zero()) return n;
  return order() + 1;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) {
    Rational acc;
    for (int k = 0; k <= n; ++k) acc += a.c_[k] * b.c_[n - k];
    r.c_[n] = acc;
  }
  return r;
}

Series Series::scaled(const Rational& s) const {
  Series r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Series Series::truncated(int new_order) const {
  if (new_order > order()) throw std::invalid_argument("truncated() cannot extend");
  check_order(new_order);
  Series r(new_order);
  std::copy(c_.begin(), c_.begin() + new_order + 1, r.c_.begin());
  return r;
}

Series Series::extended(int new_order) const {
  if (new_order < order()) throw std::invalid_argument("extended() cannot shorten");
  Series r(new_order);
  std::copy(c_.begin(), c_.end(), r.c_.begin());
  return r;
}

Series Series::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  Series r(order() + k);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

Series Series::shifted_down(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  if (k > order()) throw std::invalid_argument("shift exceeds series order");
  for (int n = 0; n < k; ++n)
    if (!c_[n].is_zero())
      throw NonzeroRemainder("z^-" + std::to_string(k) +
                             " shift hits a nonzero coefficient at z^" + std::to_string(n));
  Series r(order() - k);
  std::copy(c_.begin() + k, c_.end(), r.c_.begin());
  return r;
}

Series divide_exact(const Series& a, const Series& b) {
  const int v = b.valuation();
  if (v > b.order()) throw std::domain_error("series division by zero");
  const int result_order = std::min(a.order(), b.order()) - v;
  if (result_order < 0) throw std::invalid_argument("series too short to divide");
  const Series an = a.truncated(std::min(a.order(), result_order + v)).shifted_down(v);
  Series q(result_order);
  const Rational& lead = b.coeff(v);
  for (int n = 0; n <= result_order; ++n) {
    Rational acc = an.coeff(n);
    for (int j = 0; j < n; ++j) acc -= q.coeff(j) * b.coeff(v + n - j);
    q.set_coeff(n, acc / lead);
  }
  return q;
}

Series sqrt_series(const Series& f) {
  const Rational c0 = f.coeff(0);
  if (!(c0 > Rational(0)))
    throw NotASquareConstant("sqrt_series needs a positive constant term");
  const auto root = Rational::exact_sqrt(c0);
  if (!root)
    throw NotASquareConstant("constant term " + c0.str() + " is not a rational square");
  const int order = f.order();
  Series g = Series::constant(*root, order);
  int correct = 0;  // g matches the true root through this order
  while (correct < order) {
    g = (g + divide_exact(f, g)).scaled(Rational(1, 2));
    correct = 2 * correct + 1;
  }
  if (!(g * g == f)) throw std::logic_error("sqrt_series failed to converge");
  return g;
}

Series differentiate(const Series& f) {
  if (f.order() < 1) throw std::invalid_argument("cannot differentiate an order-0 series");
  Series r(f.order() - 1);
  for (int n = 0; n <= r.order(); ++n)
    r.set_coeff(n, f.coeff(n + 1) * Rational(n + 1));
  return r;
}

UPoly::UPoly(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::u_power(int k) {
  if (k < 0) throw std::invalid_argument("negative power of u");
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational());
  c.back() = 1;
  return UPoly(std::move(c));
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational();
  return c_[k];
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc;
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational());
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational());
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Rational& s) const {
  UPoly r = *this;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

UPoly UPoly::derivative() const {
  if (degree() < 1) return UPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long long>(i));
  return UPoly(std::move(c));
}

UPoly divide_exact(const UPoly& a, const UPoly& b) {
  if (b.degree() < 0) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem;
  rem.reserve(a.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) rem.push_back(a.coeff(i));
  const int db = b.degree();
  const Rational lead = b.coeff(db);
  std::vector<Rational> q(a.degree() >= db ? a.degree() - db + 1 : 0, Rational());
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    const Rational f = rem[i] / lead;
    if (f.is_zero()) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
  }
  for (const auto& r : rem)
    if (!r.is_zero())
      throw NonzeroRemainder("polynomial division left a nonzero remainder");
  return UPoly(std::move(q));
}

UZSeries::UZSeries(int order) {
  check_order(order);
  c_.assign(static_cast<size_t>(order) + 1, UPoly());
}

UZSeries UZSeries::constant(const UPoly& p, int order) {
  UZSeries s(order);
  s.c_[0] = p;
  return s;
}

const UPoly& UZSeries::coeff(int n) const {
  if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
  return c_[n];
}

void UZSeries::set_coeff(int n, const UPoly& p) {
  if (n < 0 || n > order()) throw std::out_of_range("series coefficient index");
  c_[n] = p;
}

int UZSeries::max_u_degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

UZSeries UZSeries::operator-() const {
  UZSeries r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

UZSeries operator+(const UZSeries& a, const UZSeries& b) {
  UZSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
  return r;
}

UZSeries operator-(const UZSeries& a, const UZSeries& b) {
  UZSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
  return r;
}

UZSeries operator*(const UZSeries& a, const UZSeries& b) {
  UZSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) {
    UPoly acc;
    for (int k = 0; k <= n; ++k) acc = acc + a.c_[k] * b.c_[n - k];
    r.c_[n] = acc;
  }
  return r;
}

UZSeries UZSeries::scaled(const Rational& s) const {
  UZSeries r = *this;
  for (auto& p : r.c_) p = p.scaled(s);
  return r;
}

UZSeries UZSeries::scaled_u(const UPoly& p) const {
  UZSeries r = *this;
  for (auto& q : r.c_) q = q * p;
  return r;
}

UZSeries UZSeries::truncated(int new_order) const {
  if (new_order > order()) throw std::invalid_argument("truncated() cannot extend");
  check_order(new_order);
  UZSeries r(new_order);
  std::copy(c_.begin(), c_.begin() + new_order + 1, r.c_.begin());
  return r;
}

UZSeries UZSeries::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  UZSeries r(order() + k);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

Series UZSeries::at_u(const Rational& x) const {
  Series r(order());
  for (int n = 0; n <= order(); ++n) r.set_coeff(n, c_[n].eval(x));
  return r;
}

UZSeries divide_exact_u(const UZSeries& a, const UPoly& b) {
  UZSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.set_coeff(n, divide_exact(a.coeff(n), b));
  return r;
}

UZSeries differentiate_u(const UZSeries& f) {
  UZSeries r(f.order());
  for (int n = 0; n <= f.order(); ++n) r.set_coeff(n, f.coeff(n).derivative());
  return r;
}

}  // namespace mapcount
