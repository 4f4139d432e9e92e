#pragma once

#include <string>
#include <vector>

#include "equipop/rational.hpp"
#include "equipop/series.hpp"

namespace equipop {

// Polynomial in x with exact rational coefficients, allowing exponent -1
// (and nothing lower). Exact arithmetic, no truncation.
class LaurentPolynomial {
 public:
  LaurentPolynomial() : min_(0), c_{Rational(0)} {}

  static LaurentPolynomial monomial(const Rational& coef, int exp) {
    if (exp < -1) throw std::invalid_argument("LaurentPolynomial: exponent below -1");
    LaurentPolynomial p;
    p.min_ = exp;
    p.c_ = {coef};
    p.normalize();
    return p;
  }

  static LaurentPolynomial constant(const Rational& coef) { return monomial(coef, 0); }

  bool is_zero() const { return c_.size() == 1 && c_[0] == 0 && min_ == 0; }

  Rational coeff(int e) const {
    if (e < min_ || e > max_exponent()) return Rational(0);
    return c_[static_cast<std::size_t>(e - min_)];
  }

  int min_exponent() const { return min_; }
  int max_exponent() const { return min_ + static_cast<int>(c_.size()) - 1; }

  bool operator==(const LaurentPolynomial& o) const = default;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    const int lo = std::min(a.min_, b.min_);
    const int hi = std::max(a.max_exponent(), b.max_exponent());
    LaurentPolynomial r;
    r.min_ = lo;
    r.c_.assign(static_cast<std::size_t>(hi - lo) + 1, Rational(0));
    for (int e = lo; e <= hi; ++e) r.c_[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    r.normalize();
    return r;
  }

  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (Rational(-1) * b);
  }

  friend LaurentPolynomial operator*(const Rational& s, const LaurentPolynomial& a) {
    LaurentPolynomial r = a;
    for (auto& x : r.c_) x *= s;
    r.normalize();
    return r;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const Rational& s) { return s * a; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    r.min_ = a.min_ + b.min_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    if (!r.is_zero() && r.min_ < -1)
      throw std::domain_error("LaurentPolynomial: product has exponent below -1");
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead + 1 < c_.size() && c_[lead] == 0) ++lead;
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
      min_ += static_cast<int>(lead);
    }
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.size() == 1 && c_[0] == 0) min_ = 0;
  }

  int min_;                  // exponent of c_[0]
  std::vector<Rational> c_;  // dense from min_ upward; no zero ends
};

inline LaurentPolynomial pow_int(const LaurentPolynomial& a, int e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  LaurentPolynomial r = LaurentPolynomial::constant(Rational(1));
  for (int i = 0; i < e; ++i) r *= a;
  return r;
}

// Substitute a series for x. Negative exponents require the series to be a
// unit (nonzero constant term).
inline TruncatedSeries eval_at_series(const LaurentPolynomial& p, const TruncatedSeries& x) {
  TruncatedSeries acc(x.order());
  const TruncatedSeries one = TruncatedSeries::constant(Rational(1), x.order());
  if (p.min_exponent() < 0 && x.coeff(0) == 0)
    throw std::domain_error("eval_at_series: negative exponent needs a unit argument");
  TruncatedSeries xinv = one;
  if (p.min_exponent() < 0) xinv = one / x;
  for (int e = p.min_exponent(); e <= p.max_exponent(); ++e) {
    if (p.coeff(e) == 0) continue;
    TruncatedSeries pw = e >= 0 ? pow_int(x, e) : pow_int(xinv, -e);
    acc += p.coeff(e) * pw;
  }
  return acc;
}

inline Rational eval_at_rational(const LaurentPolynomial& p, const Rational& x) {
  if (p.min_exponent() < 0 && x == 0)
    throw std::domain_error("eval_at_rational: negative exponent at x = 0");
  Rational acc(0);
  for (int e = p.min_exponent(); e <= p.max_exponent(); ++e) {
    if (p.coeff(e) == 0) continue;
    Rational pw(1);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) pw *= x;
    if (e < 0) pw = 1 / pw;
    acc += p.coeff(e) * pw;
  }
  return acc;
}

inline std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.min_exponent(); e <= p.max_exponent(); ++e) {
    if (p.coeff(e) == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_fraction_string(p.coeff(e));
    if (e == 1)
      out += "*x";
    else if (e != 0)
      out += "*x^" + std::to_string(e);
  }
  return out;
}

}  // namespace equipop
