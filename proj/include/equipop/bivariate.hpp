#pragma once

#include <string>
#include <vector>

#include "equipop/series.hpp"

namespace equipop {

// Power series in u and t, truncated at u-degree U and t-order N, stored as
// one univariate slice (in t) per u-power. Binary operations truncate both
// bounds to the smaller operand.
class BivariateSeries {
 public:
  BivariateSeries(int u_bound, int t_order) {
    if (u_bound < 0) throw std::invalid_argument("BivariateSeries: negative u-degree bound");
    slices_.assign(static_cast<std::size_t>(u_bound) + 1, TruncatedSeries(t_order));
  }

  explicit BivariateSeries(std::vector<TruncatedSeries> slices) : slices_(std::move(slices)) {
    if (slices_.empty()) throw std::invalid_argument("BivariateSeries: no slices");
    for (const auto& s : slices_)
      if (s.order() != slices_[0].order())
        throw std::invalid_argument("BivariateSeries: slices must share one t-order");
  }

  static BivariateSeries monomial(const Rational& coef, int u_pow, int t_exp, int u_bound,
                                  int t_order) {
    BivariateSeries b(u_bound, t_order);
    if (u_pow < 0 || u_pow > u_bound)
      throw std::invalid_argument("BivariateSeries::monomial: u-power outside truncation");
    b.slices_[static_cast<std::size_t>(u_pow)] = TruncatedSeries::monomial(coef, t_exp, t_order);
    return b;
  }

  static BivariateSeries from_univariate(const TruncatedSeries& s, int u_bound) {
    BivariateSeries b(u_bound, s.order());
    b.slices_[0] = s;
    return b;
  }

  int u_bound() const { return static_cast<int>(slices_.size()) - 1; }
  int t_order() const { return slices_[0].order(); }

  const TruncatedSeries& slice(int u_pow) const {
    if (u_pow < 0 || u_pow > u_bound())
      throw std::out_of_range("BivariateSeries::slice: u-power outside truncation");
    return slices_[static_cast<std::size_t>(u_pow)];
  }

  void set_slice(int u_pow, TruncatedSeries s) {
    if (u_pow < 0 || u_pow > u_bound())
      throw std::out_of_range("BivariateSeries::set_slice: u-power outside truncation");
    if (s.order() != t_order())
      throw std::invalid_argument("BivariateSeries::set_slice: wrong t-order");
    slices_[static_cast<std::size_t>(u_pow)] = std::move(s);
  }

  const Rational& coeff(int u_pow, int t_exp) const { return slice(u_pow).coeff(t_exp); }

  bool operator==(const BivariateSeries& o) const = default;

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
    const int ub = std::min(a.u_bound(), b.u_bound());
    std::vector<TruncatedSeries> out;
    for (int k = 0; k <= ub; ++k) out.push_back(a.slice(k) + b.slice(k));
    return BivariateSeries(std::move(out));
  }

  friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
    const int ub = std::min(a.u_bound(), b.u_bound());
    std::vector<TruncatedSeries> out;
    for (int k = 0; k <= ub; ++k) out.push_back(a.slice(k) - b.slice(k));
    return BivariateSeries(std::move(out));
  }

  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    const int ub = std::min(a.u_bound(), b.u_bound());
    const int n = std::min(a.t_order(), b.t_order());
    BivariateSeries r(ub, n);
    for (int k = 0; k <= ub; ++k) {
      TruncatedSeries acc(n);
      for (int i = 0; i <= k; ++i) acc += a.slice(i).truncated(n) * b.slice(k - i).truncated(n);
      r.slices_[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return r;
  }

  friend BivariateSeries operator*(const Rational& s, const BivariateSeries& a) {
    BivariateSeries r = a;
    for (auto& sl : r.slices_) sl = s * sl;
    return r;
  }

  friend BivariateSeries operator*(const BivariateSeries& a, const Rational& s) { return s * a; }

  // Division where the divisor's u^0 slice is a unit in t: solve for the
  // quotient slice by slice in increasing u-power.
  friend BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b) {
    if (b.slice(0).is_zero() || b.slice(0).valuation() != 0)
      throw std::domain_error("BivariateSeries: divisor's u^0 slice must be a unit in t");
    const int ub = std::min(a.u_bound(), b.u_bound());
    const int n = std::min(a.t_order(), b.t_order());
    std::vector<TruncatedSeries> q;
    for (int k = 0; k <= ub; ++k) {
      TruncatedSeries acc = a.slice(k).truncated(n);
      for (int j = 0; j < k; ++j) acc -= q[static_cast<std::size_t>(j)] * b.slice(k - j).truncated(n);
      q.push_back(acc / b.slice(0).truncated(n));
    }
    return BivariateSeries(std::move(q));
  }

  BivariateSeries& operator+=(const BivariateSeries& o) { return *this = *this + o; }
  BivariateSeries& operator-=(const BivariateSeries& o) { return *this = *this - o; }
  BivariateSeries& operator*=(const BivariateSeries& o) { return *this = *this * o; }

 private:
  std::vector<TruncatedSeries> slices_;
};

inline BivariateSeries times_univariate(const BivariateSeries& a, const TruncatedSeries& s) {
  std::vector<TruncatedSeries> out;
  const int n = std::min(a.t_order(), s.order());
  for (int k = 0; k <= a.u_bound(); ++k) out.push_back(a.slice(k).truncated(n) * s.truncated(n));
  return BivariateSeries(std::move(out));
}

// Slice-wise division by a univariate series; the t-order of every slice
// drops by the divisor's valuation.
inline BivariateSeries divide_by_univariate(const BivariateSeries& a, const TruncatedSeries& s) {
  std::vector<TruncatedSeries> out;
  for (int k = 0; k <= a.u_bound(); ++k) out.push_back(a.slice(k) / s);
  return BivariateSeries(std::move(out));
}

// Square root whose u^0 slice has constant term 1:
// y_k = (a_k - sum_{0<i<k} y_i y_{k-i}) / (2 y_0).
inline BivariateSeries sqrt_series(const BivariateSeries& a) {
  const TruncatedSeries y0 = sqrt_series(a.slice(0));
  const int n = a.t_order();
  std::vector<TruncatedSeries> y{y0};
  for (int k = 1; k <= a.u_bound(); ++k) {
    TruncatedSeries acc = a.slice(k);
    for (int i = 1; i < k; ++i) acc -= y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)];
    acc = acc / (Rational(2) * y0);
    y.push_back(acc.truncated(n));
  }
  return BivariateSeries(std::move(y));
}

inline BivariateSeries pow_int(const BivariateSeries& a, int e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  BivariateSeries r = BivariateSeries::monomial(Rational(1), 0, 0, a.u_bound(), a.t_order());
  for (int i = 0; i < e; ++i) r *= a;
  return r;
}

// (1 + w)^r where w must have t-valuation >= 1 in every u-slice, so the
// binomial sum terminates at the t-order.
inline BivariateSeries pow_rational(const BivariateSeries& a, const Rational& r) {
  if (a.coeff(0, 0) != 1)
    throw std::domain_error("pow_rational: constant term must be 1");
  for (int k = 1; k <= a.u_bound(); ++k)
    if (a.coeff(k, 0) != 0)
      throw std::domain_error("pow_rational: u-slices above 0 must vanish at t^0");
  const int n = a.t_order();
  const BivariateSeries one = BivariateSeries::monomial(Rational(1), 0, 0, a.u_bound(), n);
  const BivariateSeries w = a - one;
  BivariateSeries acc = one;
  BivariateSeries wp = one;
  for (int j = 1; j <= n; ++j) {
    wp *= w;
    acc += binomial(r, j) * wp;
  }
  return acc;
}

}  // namespace equipop
