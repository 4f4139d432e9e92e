#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "equipop/rational.hpp"

namespace equipop {

// Power series in t with exact rational coefficients, truncated after t^order.
// Binary operations truncate to the smaller order of the two operands.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  }

  explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
  }

  static TruncatedSeries monomial(const Rational& coef, int exp, int order) {
    TruncatedSeries s(order);
    if (exp < 0 || exp > order)
      throw std::invalid_argument("TruncatedSeries::monomial: exponent outside truncation");
    s.c_[static_cast<std::size_t>(exp)] = coef;
    return s;
  }

  static TruncatedSeries constant(const Rational& coef, int order) {
    return monomial(coef, 0, order);
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& coeff(int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("TruncatedSeries::coeff: index outside truncation");
    return c_[static_cast<std::size_t>(i)];
  }

  void set_coeff(int i, Rational v) {
    if (i < 0 || i > order()) throw std::out_of_range("TruncatedSeries::set_coeff: index outside truncation");
    c_[static_cast<std::size_t>(i)] = std::move(v);
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  // Index of the lowest nonzero coefficient.
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (c_[static_cast<std::size_t>(i)] != 0) return i;
    throw std::domain_error("TruncatedSeries::valuation: series is zero to its truncation order");
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
      throw std::invalid_argument("TruncatedSeries::truncated: bad order");
    return TruncatedSeries(
        std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
  }

  bool operator==(const TruncatedSeries& o) const = default;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i)
      r.c_[static_cast<std::size_t>(i)] =
          a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i)
      r.c_[static_cast<std::size_t>(i)] =
          a.c_[static_cast<std::size_t>(i)] - b.c_[static_cast<std::size_t>(i)];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.c_[static_cast<std::size_t>(i)] = -a.c_[static_cast<std::size_t>(i)];
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= n; ++j)
        r.c_[static_cast<std::size_t>(i + j)] +=
            a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return r;
  }

  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.c_[static_cast<std::size_t>(i)] = s * a.c_[static_cast<std::size_t>(i)];
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& s) { return s * a; }

  // Power-series long division. The divisor's valuation must be cancelled by
  // the dividend; the quotient is truncated at min(order) - valuation(b).
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int v = b.valuation();
    for (int i = 0; i < v && i <= a.order(); ++i)
      if (a.c_[static_cast<std::size_t>(i)] != 0)
        throw std::domain_error("TruncatedSeries: division does not cancel the divisor's valuation");
    const int n = std::min(a.order(), b.order()) - v;
    if (n < 0) throw std::domain_error("TruncatedSeries: quotient order would be negative");
    TruncatedSeries q(n);
    const Rational& lead = b.c_[static_cast<std::size_t>(v)];
    for (int i = 0; i <= n; ++i) {
      Rational acc = (i + v <= a.order()) ? a.c_[static_cast<std::size_t>(i + v)] : Rational(0);
      for (int j = 0; j < i; ++j)
        acc -= q.c_[static_cast<std::size_t>(j)] * b.c_[static_cast<std::size_t>(i - j + v)];
      q.c_[static_cast<std::size_t>(i)] = acc / lead;
    }
    return q;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

 private:
  std::vector<Rational> c_;
};

// Square root with constant term 1: y_n = (a_n - sum_{0<i<n} y_i y_{n-i}) / 2.
inline TruncatedSeries sqrt_series(const TruncatedSeries& a) {
  if (a.coeff(0) != 1)
    throw std::domain_error("sqrt_series: constant term must be 1");
  TruncatedSeries y(a.order());
  y.set_coeff(0, Rational(1));
  for (int n = 1; n <= a.order(); ++n) {
    Rational acc = a.coeff(n);
    for (int i = 1; i < n; ++i) acc -= y.coeff(i) * y.coeff(n - i);
    y.set_coeff(n, acc / 2);
  }
  return y;
}

// Multiply by t^k (k may be negative; then the series must have valuation
// >= -k). The truncation order moves with the shift.
inline TruncatedSeries shift(const TruncatedSeries& a, int k) {
  const int n = a.order() + k;
  if (n < 0) throw std::invalid_argument("shift: order would become negative");
  TruncatedSeries r(n);
  for (int i = 0; i <= a.order(); ++i) {
    if (i + k < 0) {
      if (a.coeff(i) != 0)
        throw std::domain_error("shift: negative shift does not cancel low-order terms");
      continue;
    }
    if (i + k <= n) r.set_coeff(i + k, a.coeff(i));
  }
  return r;
}

inline TruncatedSeries pow_int(const TruncatedSeries& a, int e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  TruncatedSeries r = TruncatedSeries::constant(Rational(1), a.order());
  for (int i = 0; i < e; ++i) r *= a;
  return r;
}

// (1 + w)^r for rational r via the binomial series; requires constant term 1
// so that w has valuation >= 1 and the sum terminates at the truncation order.
inline TruncatedSeries pow_rational(const TruncatedSeries& a, const Rational& r) {
  if (a.coeff(0) != 1)
    throw std::domain_error("pow_rational: constant term must be 1");
  const int n = a.order();
  TruncatedSeries w = a - TruncatedSeries::constant(Rational(1), n);
  TruncatedSeries acc = TruncatedSeries::constant(Rational(1), n);
  TruncatedSeries wp = TruncatedSeries::constant(Rational(1), n);
  for (int j = 1; j <= n; ++j) {
    wp *= w;
    acc += binomial(r, j) * wp;
  }
  return acc;
}

inline TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b,
                                    const std::string& op) {
  if (op == "add") return a + b;
  if (op == "sub") return a - b;
  if (op == "mul") return a * b;
  if (op == "div") return a / b;
  if (op == "sqrt") return sqrt_series(a);
  if (op == "pow") {
    for (int i = 1; i <= b.order(); ++i)
      if (b.coeff(i) != 0) throw std::invalid_argument("series_arith: pow exponent must be constant");
    const Rational e = b.coeff(0);
    if (e.get_den() == 1 && e >= 0) return pow_int(a, static_cast<int>(e.get_num().get_si()));
    return pow_rational(a, e);
  }
  throw std::invalid_argument("series_arith: unknown op '" + op + "'");
}

// "c0 + c1*t + c2*t^2 + ..." with every coefficient printed as an exact
// rational.
inline std::string to_string(const TruncatedSeries& a) {
  std::string out;
  for (int i = 0; i <= a.order(); ++i) {
    if (i) out += " + ";
    out += to_fraction_string(a.coeff(i));
    if (i == 1)
      out += "*t";
    else if (i > 1)
      out += "*t^" + std::to_string(i);
  }
  return out;
}

}  // namespace equipop
