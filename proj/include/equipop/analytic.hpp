#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "equipop/bivariate.hpp"
#include "equipop/census.hpp"
#include "equipop/laurent.hpp"
#include "equipop/partition.hpp"
#include "equipop/series.hpp"

namespace equipop {

// Generating function of the separable permutations, (3 - t - r)/2 with
// r = sqrt(1 - 6t + t^2); constant term 1.
inline TruncatedSeries schroder_series(int N = 10) {
  TruncatedSeries rad(N);
  rad.set_coeff(0, 1);
  if (N >= 1) rad.set_coeff(1, -6);
  if (N >= 2) rad.set_coeff(2, 1);
  const TruncatedSeries r = sqrt_series(rad);
  TruncatedSeries num = -r;
  num.set_coeff(0, num.coeff(0) + 3);
  if (N >= 1) num.set_coeff(1, num.coeff(1) - 1);
  return Rational(1, 2) * num;
}

// P(u,t): coefficient of u^k t^n counts increasing k-markings across the
// separable permutations of length n. Census route.
inline BivariateSeries bivariate_P_brute(int U = 5, int N = 10, const CensusOptions& opts = {}) {
  if (U > N) throw std::invalid_argument("bivariate_P_brute: u-degree bound above t-order");
  BivariateSeries P(U, N);
  TruncatedSeries s0(N);
  for (int n = 0; n <= N; ++n) s0.set_coeff(n, Rational(schroder_count(n)));
  P.set_slice(0, s0);
  for (int k = 1; k <= U; ++k)
    P.set_slice(k, popularity_series(Permutation::identity(k), N, opts));
  return P;
}

// P(u,t) from the structural system
//   P      = 1 + (u+1) t + Pplus + Pminus
//   Pplus  = (P - Pplus - 1)(P - 1)
//   Pminus = (S - t - 1)/2 + (P - Pminus - (S - t - 1)/2 - 1 - t)(S^2 - 1),
// eliminating Pplus = (P-1)^2/P and Pminus likewise, then iterating from
// P = 1 + (u+1)t. Each pass fixes one more t-order, so the iteration must
// reach a fixed point within N+2 passes.
//
// The second factor of the skew equation must count marked skew
// indecomposables only, so every unmarked skew-indecomposable term is
// removed: the empty permutation (1), the bare single entry (t), and the
// longer ones ((S-t-1)/2). Dropping the bare single entry is what makes the
// u = 0 slice collapse to S and the solution agree with the census and the
// radical expression.
inline BivariateSeries bivariate_P_system(int U = 5, int N = 10) {
  if (U > N) throw std::invalid_argument("bivariate_P_system: u-degree bound above t-order");
  const TruncatedSeries S = schroder_series(N);
  const TruncatedSeries S2 = S * S;
  TruncatedSeries half_unmarked = S;  // (S - t - 1)/2
  half_unmarked.set_coeff(0, half_unmarked.coeff(0) - 1);
  half_unmarked.set_coeff(1, half_unmarked.coeff(1) - 1);
  half_unmarked = Rational(1, 2) * half_unmarked;

  const BivariateSeries one = BivariateSeries::monomial(1, 0, 0, U, N);
  const BivariateSeries half_b = BivariateSeries::from_univariate(half_unmarked, U);
  const BivariateSeries s2m1 = BivariateSeries::from_univariate(
      S2 - TruncatedSeries::constant(1, N), U);
  const BivariateSeries plain_single = BivariateSeries::monomial(1, 0, 1, U, N);
  const BivariateSeries base =
      one + BivariateSeries::monomial(1, 1, 1, U, N) + plain_single;

  BivariateSeries P = base;
  for (int pass = 0; pass <= N + 1; ++pass) {
    const BivariateSeries pm1 = P - one;
    const BivariateSeries p_plus = pm1 * pm1 / P;
    const BivariateSeries p_minus = divide_by_univariate(
        half_b + (P - half_b - one - plain_single) * s2m1, S2);
    const BivariateSeries next = base + p_plus + p_minus;
    if (next == P) return P;
    P = next;
  }
  throw std::logic_error("bivariate_P_system: fixed point did not stabilize");
}

// P(u,t) from the explicit radical expression; the final division by
// 4t(6 - t) must cancel exactly, anything else is a transcription error
// surfaced by the series division.
inline BivariateSeries bivariate_P_closed(int U = 5, int N = 10) {
  if (U > N) throw std::invalid_argument("bivariate_P_closed: u-degree bound above t-order");
  const int M = N + 1;
  TruncatedSeries rad(M);
  rad.set_coeff(0, 1);
  rad.set_coeff(1, -6);
  rad.set_coeff(2, 1);
  const BivariateSeries r = BivariateSeries::from_univariate(sqrt_series(rad), U);
  const BivariateSeries one = BivariateSeries::monomial(1, 0, 0, U, M);
  const BivariateSeries u = BivariateSeries::monomial(1, 1, 0, U, M);
  const BivariateSeries t = BivariateSeries::monomial(1, 0, 1, U, M);
  const BivariateSeries t2 = t * t;

  const BivariateSeries s_rad =
      one + (u * r - Rational(3) * u - Rational(6) * one) * t +
      (u * u + u + one) * t2;
  const BivariateSeries s = sqrt_series(s_rad);

  const BivariateSeries num =
      ((u + one) * t2 - Rational(3) * (u + Rational(2) * one) * t + Rational(3) * one) * r -
      (Rational(3) * u - Rational(17) * one) * t - Rational(3) * (Rational(2) * u + Rational(3) * one) * t2 +
      (u + one) * t2 * t +
      (r * (t - Rational(3) * one) - Rational(6) * t + t2 - Rational(3) * one) * s +
      Rational(3) * one;

  TruncatedSeries den(M);
  den.set_coeff(1, 24);
  den.set_coeff(2, -4);
  return divide_by_univariate(num, den);
}

inline Rational narayana(int n, int k) {
  if (n < 0) throw std::invalid_argument("narayana: negative n");
  if (n == 0) return k == 0 ? Rational(1) : Rational(0);
  if (k < 1 || k > n) return Rational(0);
  return Rational(binomial(n, k) * binomial(n, k - 1)) / Rational(n);
}

// (1 - t - tu - sqrt((1 - t - tu)^2 - 4t^2 u)) / 2t, plus 1 so that the
// constant term honors the N_{0,0} = 1 convention.
inline BivariateSeries narayana_gf(int U = 5, int N = 10) {
  const int M = N + 1;
  const BivariateSeries one = BivariateSeries::monomial(1, 0, 0, U, M);
  const BivariateSeries u = BivariateSeries::monomial(1, 1, 0, U, M);
  const BivariateSeries t = BivariateSeries::monomial(1, 0, 1, U, M);
  const BivariateSeries head = one - t - t * u;
  const BivariateSeries sq = sqrt_series(head * head - Rational(4) * (t * t * u));
  TruncatedSeries den(M);
  den.set_coeff(1, 2);
  return divide_by_univariate(head - sq, den) + BivariateSeries::monomial(1, 0, 0, U, N);
}

// q_n(x) = sum_k N_{n,k} x^{k-1} (1-x)^{n-k}; q_0 = 1/x.
inline LaurentPolynomial q_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("q_polynomial: negative index");
  const LaurentPolynomial one_minus_x =
      LaurentPolynomial::constant(1) - LaurentPolynomial::monomial(1, 1);
  LaurentPolynomial acc;
  for (int k = 0; k <= n; ++k) {
    const Rational c = narayana(n, k);
    if (c == 0) continue;
    acc += LaurentPolynomial::monomial(c, k - 1) * pow_int(one_minus_x, n - k);
  }
  return acc;
}

// q_n through the terminating Gauss sum: q_n(x) = (1-x)^{n-1} F(1-n, -n; 2; x/(1-x))
// expanded as sum_j c_j x^j (1-x)^{n-1-j} with c_j the hypergeometric term.
inline LaurentPolynomial q_via_hypergeometric(int n) {
  if (n < 1) throw std::invalid_argument("q_via_hypergeometric: index must be positive");
  const LaurentPolynomial x = LaurentPolynomial::monomial(1, 1);
  const LaurentPolynomial one_minus_x = LaurentPolynomial::constant(1) - x;
  LaurentPolynomial acc;
  Rational c(1);
  for (int j = 0; j <= n - 1; ++j) {
    if (j > 0) {
      c *= Rational((1 - n) + (j - 1)) * Rational((-n) + (j - 1));
      c /= Rational(j + 1) * Rational(j);
    }
    acc += pow_int(x, j) * pow_int(one_minus_x, n - 1 - j) * c;
  }
  return acc;
}

// Three-term recurrence: C_0 = 1, C_1 = 2*alpha*x,
// n C_n = 2x(n + alpha - 1) C_{n-1} - (n + 2 alpha - 2) C_{n-2}.
inline LaurentPolynomial gegenbauer(int n, const Rational& alpha) {
  if (n < 0) throw std::invalid_argument("gegenbauer: negative index");
  LaurentPolynomial prev = LaurentPolynomial::constant(1);
  if (n == 0) return prev;
  LaurentPolynomial cur = LaurentPolynomial::monomial(2 * alpha, 1);
  for (int m = 2; m <= n; ++m) {
    const LaurentPolynomial next =
        (LaurentPolynomial::monomial(2 * (Rational(m) + alpha - 1), 1) * cur -
         (Rational(m) + 2 * alpha - 2) * prev) *
        Rational(1, static_cast<unsigned long>(m));
    prev = cur;
    cur = next;
  }
  return cur;
}

// The relation q_n(x) = 2 (1-2x)^{n-1} C_{n-1}^{(3/2)}(arg) / (n(n+1)),
// evaluated for the argument as printed, x/(1-2x), and for the corrected
// argument 1/(1-2x). The prefactor clears every (1-2x) denominator, so both
// sides are exact polynomials.
struct QGegenbauerReport {
  int n = 0;
  LaurentPolynomial expected;         // q_n
  LaurentPolynomial printed_value;    // argument x/(1-2x)
  LaurentPolynomial corrected_value;  // argument 1/(1-2x)
  bool printed_holds = false;
  bool corrected_holds = false;
};

inline QGegenbauerReport q_gegenbauer_relation(int n) {
  if (n < 1) throw std::invalid_argument("q_gegenbauer_relation: index must be positive");
  QGegenbauerReport rep;
  rep.n = n;
  rep.expected = q_polynomial(n);
  const LaurentPolynomial C = gegenbauer(n - 1, Rational(3, 2));
  const LaurentPolynomial x = LaurentPolynomial::monomial(1, 1);
  const LaurentPolynomial one_minus_2x = LaurentPolynomial::constant(1) - Rational(2) * x;
  const Rational scale = Rational(2) / Rational(static_cast<long>(n) * (n + 1));
  LaurentPolynomial printed, corrected;
  for (int j = 0; j <= n - 1; ++j) {
    const Rational c = C.coeff(j);
    if (c == 0) continue;
    printed += pow_int(x, j) * pow_int(one_minus_2x, n - 1 - j) * c;
    corrected += pow_int(one_minus_2x, n - 1 - j) * c;
  }
  rep.printed_value = printed * scale;
  rep.corrected_value = corrected * scale;
  rep.printed_holds = rep.printed_value == rep.expected;
  rep.corrected_holds = rep.corrected_value == rep.expected;
  return rep;
}

// Popularity of the increasing pattern of length n:
// P_{I(n)} = S^{3n-3} t^n q_{n-1}(S^{-2}) / (2 - S^2)^{2n-1}.
inline TruncatedSeries increasing_popularity_formula(int n, int N) {
  if (n < 1) throw std::invalid_argument("increasing_popularity_formula: length must be positive");
  if (n > N) throw std::invalid_argument("increasing_popularity_formula: order below length");
  const TruncatedSeries S = schroder_series(N);
  const TruncatedSeries one = TruncatedSeries::constant(1, N);
  const TruncatedSeries s_inv2 = one / (S * S);
  const TruncatedSeries two_minus_s2 = Rational(2) * one - S * S;
  const TruncatedSeries unit = pow_int(S, 3 * n - 3) *
                               eval_at_series(q_polynomial(n - 1), s_inv2) /
                               pow_int(two_minus_s2, 2 * n - 1);
  return shift(unit, n).truncated(N);
}

// F_m = P_{I(m+1)} / P_1, census-backed; valuation m, F_0 = 1.
inline TruncatedSeries factor_F(int m, int N, const CensusOptions& opts = {}) {
  if (m < 0) throw std::invalid_argument("factor_F: negative index");
  if (N < 0) throw std::invalid_argument("factor_F: negative order");
  if (m == 0) return TruncatedSeries::constant(1, N);
  const TruncatedSeries num = popularity_series(Permutation::identity(m + 1), N + 1, opts);
  const TruncatedSeries den = popularity_series(Permutation::identity(1), N + 1, opts);
  return num / den;
}

// Popularity of the wedge permutation of lambda:
// P = prod_i P_{I(lambda_i + 1)} / P_1^{k-1}, all factors from the formula.
inline TruncatedSeries wedge_popularity(const Partition& lambda, int N) {
  if (lambda.empty()) throw std::invalid_argument("wedge_popularity: partition must be nonempty");
  if (lambda.weight() + 1 > N)
    throw std::invalid_argument("wedge_popularity: order below the wedge length");
  const int k = static_cast<int>(lambda.parts().size());
  const int M = N + k - 1;
  TruncatedSeries num = TruncatedSeries::constant(1, M);
  for (const int part : lambda.parts()) num *= increasing_popularity_formula(part + 1, M);
  const TruncatedSeries den = pow_int(increasing_popularity_formula(1, M), k - 1);
  return num / den;
}

// Checks P_{I(m) + pi} = F_m P_pi on census series, and for m >= 1 the
// intermediate identity (skew-restricted) = (S^2 - 1)(sum-restricted) for
// the composite pattern.
struct FactorizationReport {
  int m = 0;
  Permutation pi;
  int N = 0;
  bool factor_identity = false;
  bool restricted_identity = false;
  bool pass() const { return factor_identity && restricted_identity; }
};

inline FactorizationReport factorization_check(int m, const Permutation& pi, int N,
                                               const CensusOptions& opts = {}) {
  if (m < 0) throw std::invalid_argument("factorization_check: negative m");
  if (!is_separable(pi)) throw not_separable(to_string(pi) + " is not separable");
  if (is_sum_decomposable(pi))
    throw std::invalid_argument("factorization_check: pi must be sum-indecomposable");
  FactorizationReport rep;
  rep.m = m;
  rep.pi = pi;
  rep.N = N;
  const Permutation sigma = m == 0 ? pi : direct_sum(Permutation::identity(m), pi);
  const TruncatedSeries lhs = popularity_series(sigma, N, opts);
  const TruncatedSeries rhs = factor_F(m, N, opts) * popularity_series(pi, N, opts);
  rep.factor_identity = lhs == rhs;
  if (m == 0) {
    rep.restricted_identity = true;
  } else {
    const TruncatedSeries skew =
        restricted_popularity_series(sigma, N, StructuralFilter::skew_decomposable, opts);
    const TruncatedSeries sum =
        restricted_popularity_series(sigma, N, StructuralFilter::sum_decomposable, opts);
    const TruncatedSeries S = schroder_series(N);
    rep.restricted_identity =
        skew == (S * S - TruncatedSeries::constant(1, N)) * sum;
  }
  return rep;
}

// Recover the partition from a popularity series by finite search over the
// partitions of n-1, requiring the candidate series to be pairwise distinct
// at this horizon before trusting the unique match.
inline Partition identify_partition(const TruncatedSeries& series, int n, int N) {
  if (n < 1) throw std::invalid_argument("identify_partition: length must be positive");
  if (N < n + 3) throw std::invalid_argument("identify_partition: horizon below length + 3");
  if (series.order() < N)
    throw std::invalid_argument("identify_partition: series order below horizon");
  const TruncatedSeries probe = series.truncated(N);
  if (n == 1) {
    if (probe == increasing_popularity_formula(1, N)) return Partition{};
    throw identification_error("series does not match any pattern popularity at this horizon");
  }
  const auto candidates = partitions_of(n - 1);
  std::vector<TruncatedSeries> values;
  values.reserve(candidates.size());
  for (const auto& lambda : candidates) values.push_back(wedge_popularity(lambda, N));
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (values[i] == values[j])
        throw identification_error("candidate series collide at this horizon; raise N");
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == probe) return candidates[i];
  throw identification_error("series does not match any pattern popularity at this horizon");
}

inline nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i <= s.order(); ++i) arr.push_back(to_fraction_string(s.coeff(i)));
  return arr;
}

inline nlohmann::json to_json(const BivariateSeries& b) {
  nlohmann::json obj = nlohmann::json::object();
  for (int k = 0; k <= b.u_bound(); ++k) obj[std::to_string(k)] = to_json(b.slice(k));
  return obj;
}

}  // namespace equipop
