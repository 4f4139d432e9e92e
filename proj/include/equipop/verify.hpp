#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "equipop/analytic.hpp"
#include "equipop/census.hpp"
#include "equipop/exchange.hpp"

namespace equipop {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline void add(std::vector<CheckResult>& out, std::string name, bool pass,
                std::string detail = "") {
  out.push_back(CheckResult{std::move(name), pass, std::move(detail)});
}

}  // namespace detail

// Schröder layer: closed form vs counting recurrence vs enumeration, the
// even sum/skew split, the first-block convolution, and a demonstration that
// the minus-sign radicand variant breaks immediately.
inline std::vector<CheckResult> suite_schroder(int N, const CensusOptions& = {}) {
  std::vector<CheckResult> out;
  const TruncatedSeries S = schroder_series(N);

  bool rec_ok = true;
  for (int n = 0; n <= N; ++n) rec_ok = rec_ok && S.coeff(n) == Rational(schroder_count(n));
  detail::add(out, "series matches counting recurrence", rec_ok, "n <= " + std::to_string(N));

  const int E = std::min(N, 10);
  bool enum_ok = true;
  for (int n = 1; n <= E; ++n)
    enum_ok = enum_ok && BigInt(static_cast<long>(enumerate_separable(n).size())) == schroder_count(n);
  detail::add(out, "enumeration count matches", enum_ok, "n <= " + std::to_string(E));

  bool avoid_ok = true;
  for (int n = 1; n <= std::min(N, 6); ++n) {
    std::vector<Permutation> brute;
    std::vector<int> vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = i + 1;
    do {
      Permutation p(vals);
      if (is_separable(p)) brute.push_back(p);
    } while (std::next_permutation(vals.begin(), vals.end()));
    avoid_ok = avoid_ok && brute == enumerate_separable(n);
  }
  detail::add(out, "enumeration equals basis-avoidance filter", avoid_ok,
              "n <= " + std::to_string(std::min(N, 6)));

  bool split_ok = true, conv_ok = true;
  auto& cache = detail::SeparableCache::instance();
  const int M = std::min(N, 9);
  for (int n = 2; n <= M; ++n) {
    const auto sd = cache.sum_dec(n);
    const auto kd = cache.skew_dec(n);
    split_ok = split_ok && sd.size() == kd.size() &&
               BigInt(static_cast<long>(sd.size() + kd.size())) == schroder_count(n);
    BigInt conv = 0;
    for (int i = 1; i < n; ++i) {
      const BigInt first_blocks =
          (i == 1) ? BigInt(1) : BigInt(static_cast<long>(cache.skew_dec(i).size()));
      conv += first_blocks * BigInt(static_cast<long>(enumerate_separable(n - i).size()));
    }
    conv_ok = conv_ok && conv == BigInt(static_cast<long>(sd.size()));
  }
  detail::add(out, "sum and skew decomposables split evenly", split_ok, "2 <= n <= " + std::to_string(M));
  detail::add(out, "first-block convolution identity", conv_ok, "2 <= n <= " + std::to_string(M));

  TruncatedSeries bad_rad(std::max(N, 2));
  bad_rad.set_coeff(0, 1);
  bad_rad.set_coeff(1, -6);
  bad_rad.set_coeff(2, -1);
  const TruncatedSeries bad =
      Rational(1, 2) * (TruncatedSeries::constant(3, bad_rad.order()) -
                        TruncatedSeries::monomial(1, 1, bad_rad.order()) - sqrt_series(bad_rad));
  detail::add(out, "minus-sign radicand variant fails", bad.coeff(2) == Rational(5, 2),
              "its t^2 coefficient is 5/2, not 2");
  return out;
}

// The three routes to P(u,t) and the Narayana layer.
inline std::vector<CheckResult> suite_bivariate(int N, const CensusOptions& opts = {}) {
  std::vector<CheckResult> out;
  N = std::max(N, 4);
  const int NC = std::min(N, 8);  // census-backed horizon
  const int U = std::min(4, NC);
  const BivariateSeries brute = bivariate_P_brute(U, NC, opts);
  const BivariateSeries system_small = bivariate_P_system(U, NC);
  detail::add(out, "system solution matches census", system_small == brute,
              "U=" + std::to_string(U) + ", N=" + std::to_string(NC));
  const BivariateSeries system = bivariate_P_system(U, N);
  const BivariateSeries closed = bivariate_P_closed(U, N);
  detail::add(out, "radical expression matches system solution", closed == system,
              "U=" + std::to_string(U) + ", N=" + std::to_string(N));

  const bool slice0_ok = closed.slice(0) == schroder_series(N);
  detail::add(out, "u^0 slice is the Schröder series", slice0_ok);

  bool slice1_ok = true;
  for (int n = 0; n <= N; ++n)
    slice1_ok = slice1_ok && closed.coeff(1, n) == Rational(n) * Rational(schroder_count(n));
  detail::add(out, "u^1 slice counts single marks (n * s_n)", slice1_ok);

  const int NU = std::min(N, 10);
  const BivariateSeries ngf = narayana_gf(5, NU);
  bool nar_ok = true;
  for (int n = 0; n <= NU; ++n)
    for (int kk = 0; kk <= 5; ++kk) nar_ok = nar_ok && ngf.coeff(kk, n) == narayana(n, kk);
  detail::add(out, "Narayana series matches the formula values", nar_ok,
              "n <= " + std::to_string(NU) + ", k <= 5");
  return out;
}

// q-polynomials, the hypergeometric route, the Gegenbauer connection, and
// both printed-vs-corrected discrepancies.
inline std::vector<CheckResult> suite_qgegenbauer(int N, const CensusOptions& = {}) {
  std::vector<CheckResult> out;

  bool hyp_ok = true;
  for (int n = 1; n <= 20; ++n) hyp_ok = hyp_ok && q_via_hypergeometric(n) == q_polynomial(n);
  detail::add(out, "hypergeometric route equals the Narayana sum", hyp_ok, "n <= 20");

  bool corr_ok = true;
  for (int n = 1; n <= 30; ++n) corr_ok = corr_ok && q_gegenbauer_relation(n).corrected_holds;
  detail::add(out, "corrected-argument identity reproduces q_n", corr_ok, "n <= 30");

  const auto g2 = q_gegenbauer_relation(2);
  detail::add(out, "printed-argument form fails at n=2", !g2.printed_holds,
              "gives x instead of q_2 = 1");
  detail::add(out, "both argument forms agree at n=1", q_gegenbauer_relation(1).printed_holds);

  const int ORD = std::max(2, std::min(N, 8));
  bool gf_ok = true;
  {
    const BivariateSeries one = BivariateSeries::monomial(1, 0, 0, ORD, ORD);
    const BivariateSeries u = BivariateSeries::monomial(1, 1, 0, ORD, ORD);
    const BivariateSeries t = BivariateSeries::monomial(1, 0, 1, ORD, ORD);
    const BivariateSeries gf =
        pow_rational(one - Rational(2) * (u * t) + t * t, Rational(-3, 2));
    for (int n = 0; n <= ORD && gf_ok; ++n) {
      const LaurentPolynomial C = gegenbauer(n, Rational(3, 2));
      for (int kk = 0; kk <= ORD; ++kk) gf_ok = gf_ok && gf.coeff(kk, n) == C.coeff(kk);
    }
  }
  detail::add(out, "recurrence matches the classical generating function", gf_ok,
              "radical 1-2xt+t^2, order " + std::to_string(ORD));

  // The radical as printed (1 - xt + t^2) would force C_1 = (3/2) x.
  {
    const BivariateSeries one = BivariateSeries::monomial(1, 0, 0, 1, 1);
    const BivariateSeries u = BivariateSeries::monomial(1, 1, 0, 1, 1);
    const BivariateSeries t = BivariateSeries::monomial(1, 0, 1, 1, 1);
    const BivariateSeries printed = pow_rational(one - u * t + t * t, Rational(-3, 2));
    detail::add(out, "printed generating-function radical fails at t^1",
                printed.coeff(1, 1) != gegenbauer(1, Rational(3, 2)).coeff(1),
                "it would give C_1 = 3/2 x instead of 3x");
  }
  return out;
}

// The factorization lemma on census series.
inline std::vector<CheckResult> suite_factorization(int N, const CensusOptions& opts = {}) {
  std::vector<CheckResult> out;
  const int NC = std::min(std::max(N, 6), 8);
  const struct {
    int m;
    const char* pi;
  } cases[] = {{1, "1"}, {2, "21"}, {0, "21"}, {1, "231"}, {2, "1"}};
  for (const auto& c : cases) {
    const auto rep = factorization_check(c.m, parse_permutation(c.pi), NC, opts);
    detail::add(out,
                "factor identity for m=" + std::to_string(c.m) + ", pi=" + std::string(c.pi),
                rep.factor_identity && rep.restricted_identity,
                "N=" + std::to_string(NC));
  }

  // The structural filters partition the census: P = P(sum) + P(skew) + t[sigma=1].
  {
    const Permutation sigma = parse_permutation("12");
    const int NR = std::min(N, 6);
    const TruncatedSeries whole = popularity_series(sigma, NR, opts);
    const TruncatedSeries split =
        restricted_popularity_series(sigma, NR, StructuralFilter::sum_decomposable, opts) +
        restricted_popularity_series(sigma, NR, StructuralFilter::skew_decomposable, opts);
    detail::add(out, "decomposable filters partition the census", whole == split,
                "sigma=12, N=" + std::to_string(NR) + " (no length-1 term for |sigma|=2)");
  }
  return out;
}

// The wedge product formula, the increasing-pattern formula, horizon
// distinctness, and partition identification round trips.
inline std::vector<CheckResult> suite_wedge(int, const CensusOptions& opts = {}) {
  std::vector<CheckResult> out;
  const int NC = 9;  // the product and increasing formulas are checked at their stated horizon

  bool ipf_ok = true;
  for (int n = 1; n <= 5; ++n)
    ipf_ok = ipf_ok && increasing_popularity_formula(n, NC) ==
                           popularity_series(Permutation::identity(n), NC, opts);
  detail::add(out, "increasing-pattern formula matches census", ipf_ok,
              "n <= 5, N=" + std::to_string(NC));

  bool wp_ok = true;
  for (int w = 1; w <= 4; ++w)
    for (const auto& lambda : partitions_of(w))
      wp_ok = wp_ok && wedge_popularity(lambda, NC) ==
                           popularity_series(wedge(lambda).second, NC, opts);
  detail::add(out, "wedge product formula matches census", wp_ok,
              "weight <= 4, N=" + std::to_string(NC));

  bool distinct_ok = true;
  for (int w = 1; w <= 5; ++w) {
    const auto parts = partitions_of(w);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        distinct_ok = distinct_ok &&
                      !(wedge_popularity(parts[i], w + 5) == wedge_popularity(parts[j], w + 5));
  }
  detail::add(out, "distinct partitions give distinct series", distinct_ok,
              "weight <= 5 at order weight+5");

  bool id_ok = true;
  id_ok = id_ok && identify_partition(wedge_popularity(parse_partition("2,1"), 9), 4, 9) ==
                       parse_partition("2,1");
  id_ok = id_ok && identify_partition(popularity_series(parse_permutation("2143"), 9, opts), 4, 9) ==
                       parse_partition("1,1,1");
  id_ok = id_ok && identify_partition(popularity_series(parse_permutation("4321"), 9, opts), 4, 9) ==
                       parse_partition("3");
  detail::add(out, "partition identification round trips", id_ok, "length 4 at order 9");
  return out;
}

// The main classification at fixed desk horizons, plus symmetry-invariance
// of popularity rows and the wedge representative membership.
inline std::vector<CheckResult> suite_classification(int, const CensusOptions& opts = {}) {
  std::vector<CheckResult> out;
  for (int k = 3; k <= 5; ++k) {
    const int horizon = k + 4;
    const auto check = verify_classification(k, horizon, opts);
    detail::add(out,
                "classes equal signature classes, count p(k-1), k=" + std::to_string(k),
                check.pass(),
                std::to_string(check.class_count) + " classes at N=" + std::to_string(horizon));
  }

  bool sym_ok = true;
  for (int k = 2; k <= 5 && sym_ok; ++k) {
    const PopularityTable table = popularity_table(k, k + 3, opts);
    for (const auto& p : table.patterns) {
      const auto row = table.filtered_row(p, StructuralFilter::all);
      for (const auto g : {SymmetryElement::reverse, SymmetryElement::complement,
                           SymmetryElement::inverse})
        sym_ok = sym_ok && table.filtered_row(apply_symmetry(p, g), StructuralFilter::all) == row;
    }
  }
  detail::add(out, "symmetric patterns are equipopular", sym_ok, "k <= 5 at N=k+3");

  bool rep_ok = true;
  for (int k = 3; k <= 5; ++k) {
    const auto report = equipopularity_classes(k, k + 4, opts);
    for (const auto& [lambda, members] : report.signature_classes) {
      const Permutation rep = wedge(lambda).second;
      rep_ok = rep_ok && std::find(members.begin(), members.end(), rep) != members.end();
    }
  }
  detail::add(out, "wedge permutation represents its class", rep_ok, "k <= 5");
  return out;
}

inline std::vector<CheckResult> run_suite(const std::string& suite, int N,
                                          const CensusOptions& opts = {}) {
  if (suite == "schroder") return suite_schroder(N, opts);
  if (suite == "bivariate") return suite_bivariate(N, opts);
  if (suite == "qgegenbauer") return suite_qgegenbauer(N, opts);
  if (suite == "factorization") return suite_factorization(N, opts);
  if (suite == "wedge") return suite_wedge(N, opts);
  if (suite == "classification") return suite_classification(N, opts);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"schroder", "bivariate", "qgegenbauer", "factorization", "wedge",
                          "classification"}) {
      auto part = run_suite(s, N, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw parse_error("unknown suite '" + suite + "'");
}

}  // namespace equipop
