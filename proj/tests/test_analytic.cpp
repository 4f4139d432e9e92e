#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "equipop/analytic.hpp"
#include "equipop/census.hpp"
#include "equipop/exchange.hpp"
#include "equipop/partition.hpp"

using namespace equipop;

namespace {

CensusOptions fast_opts() {
  CensusOptions opts;
  opts.threads = 2;
  return opts;
}

}  // namespace

TEST_CASE("separable counting series") {
  const TruncatedSeries S = schroder_series(10);
  const std::vector<long> counts = {1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};
  for (int n = 0; n <= 10; ++n) {
    CHECK(S.coeff(n) == Rational(counts[static_cast<std::size_t>(n)]));
    CHECK(S.coeff(n) == Rational(schroder_count(n)));
  }

  // S = (3 - t - r)/2 inverts to r = 3 - t - 2S, whose square is the radicand.
  TruncatedSeries r = Rational(-2) * S;
  r.set_coeff(0, r.coeff(0) + 3);
  r.set_coeff(1, r.coeff(1) - 1);
  TruncatedSeries radicand(10);
  radicand.set_coeff(0, 1);
  radicand.set_coeff(1, -6);
  radicand.set_coeff(2, 1);
  CHECK(r * r == radicand.truncated((r * r).order()));

  CHECK(schroder_series(0).coeff(0) == Rational(1));
  CHECK_THROWS_AS(schroder_series(-1), std::invalid_argument);
}

TEST_CASE("marked-census series: three routes agree") {
  const int U = 4;
  const int N = 8;
  const BivariateSeries brute = bivariate_P_brute(U, N, fast_opts());
  const BivariateSeries system = bivariate_P_system(U, N);
  const BivariateSeries closed = bivariate_P_closed(U, N);
  CHECK(system == brute);
  CHECK(closed == brute);

  // The unmarked slice is the plain counting series.
  CHECK(brute.slice(0) == schroder_series(N));
  // Each positive slice is the popularity of the increasing pattern.
  for (int k = 1; k <= U; ++k)
    CHECK(system.slice(k) == popularity_series(Permutation::identity(k), N, fast_opts()));

  CHECK_THROWS_AS(bivariate_P_brute(9, 8), std::invalid_argument);
  CHECK_THROWS_AS(bivariate_P_system(9, 8), std::invalid_argument);
  CHECK_THROWS_AS(bivariate_P_closed(9, 8), std::invalid_argument);
}

TEST_CASE("Narayana numbers and their generating function") {
  const std::vector<long> row6 = {1, 15, 50, 50, 15, 1};
  for (int k = 1; k <= 6; ++k)
    CHECK(narayana(6, k) == Rational(row6[static_cast<std::size_t>(k - 1)]));
  CHECK(narayana(0, 0) == Rational(1));
  CHECK(narayana(5, 0) == Rational(0));
  CHECK(narayana(5, 6) == Rational(0));
  CHECK_THROWS_AS(narayana(-1, 0), std::invalid_argument);

  const BivariateSeries gf = narayana_gf(4, 8);
  for (int k = 0; k <= 4; ++k)
    for (int n = 0; n <= 8; ++n)
      CHECK(gf.slice(k).coeff(n) == narayana(n, k));
}

TEST_CASE("q-polynomials") {
  const LaurentPolynomial q0 = q_polynomial(0);
  CHECK(q0 == LaurentPolynomial::monomial(1, -1));
  CHECK(q_polynomial(1) == LaurentPolynomial::constant(1));
  CHECK(q_polynomial(2) == LaurentPolynomial::constant(1));

  const LaurentPolynomial q3 = q_polynomial(3);
  CHECK(q3.coeff(0) == Rational(1));
  CHECK(q3.coeff(1) == Rational(1));
  CHECK(q3.coeff(2) == Rational(-1));
  CHECK(q3.coeff(-1) == Rational(0));
  CHECK(q3.coeff(3) == Rational(0));

  // The terminating Gauss-sum expansion reproduces the Narayana form.
  for (int n = 1; n <= 20; ++n) CHECK(q_via_hypergeometric(n) == q_polynomial(n));
  CHECK_THROWS_AS(q_polynomial(-1), std::invalid_argument);
  CHECK_THROWS_AS(q_via_hypergeometric(0), std::invalid_argument);
}

TEST_CASE("Gegenbauer polynomials") {
  CHECK(gegenbauer(0, Rational(3, 2)) == LaurentPolynomial::constant(1));
  CHECK(gegenbauer(1, Rational(3, 2)) == LaurentPolynomial::monomial(3, 1));

  const LaurentPolynomial c2 = gegenbauer(2, Rational(3, 2));
  CHECK(c2.coeff(2) == Rational(15, 2));
  CHECK(c2.coeff(1) == Rational(0));
  CHECK(c2.coeff(0) == Rational(-3, 2));

  // Legendre specialization: alpha = 1/2 gives P_3 = (5x^3 - 3x)/2.
  const LaurentPolynomial p3 = gegenbauer(3, Rational(1, 2));
  CHECK(p3.coeff(3) == Rational(5, 2));
  CHECK(p3.coeff(1) == Rational(-3, 2));
  CHECK_THROWS_AS(gegenbauer(-1, Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("q to Gegenbauer bridge: stated argument fails, corrected one holds") {
  const QGegenbauerReport first = q_gegenbauer_relation(1);
  CHECK(first.printed_holds);
  CHECK(first.corrected_holds);

  const QGegenbauerReport second = q_gegenbauer_relation(2);
  CHECK_FALSE(second.printed_holds);
  CHECK(second.corrected_holds);
  CHECK(second.expected == q_polynomial(2));

  for (int n = 1; n <= 30; ++n) {
    const QGegenbauerReport rep = q_gegenbauer_relation(n);
    CHECK(rep.corrected_holds);
    CHECK(rep.corrected_value == rep.expected);
    if (n >= 2) CHECK_FALSE(rep.printed_holds);
  }
  CHECK_THROWS_AS(q_gegenbauer_relation(0), std::invalid_argument);
}

TEST_CASE("increasing-pattern popularity: radical formula matches the census") {
  const int N = 8;
  for (int n = 1; n <= 5; ++n) {
    const TruncatedSeries formula = increasing_popularity_formula(n, N);
    const TruncatedSeries census = popularity_series(Permutation::identity(n), N, fast_opts());
    CHECK(formula == census);
  }
  CHECK_THROWS_AS(increasing_popularity_formula(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(increasing_popularity_formula(9, 8), std::invalid_argument);
}

TEST_CASE("prepend factor") {
  const TruncatedSeries f0 = factor_F(0, 5);
  CHECK(f0 == TruncatedSeries::constant(1, 5));

  const TruncatedSeries f1 = factor_F(1, 3, fast_opts());
  CHECK(f1.coeff(0) == Rational(0));
  CHECK(f1.coeff(1) == Rational(1));
  CHECK(f1.coeff(2) == Rational(5));
  CHECK(f1.coeff(3) == Rational(28));

  for (int m = 1; m <= 3; ++m) CHECK(factor_F(m, 6, fast_opts()).valuation() == m);
  CHECK_THROWS_AS(factor_F(-1, 5), std::invalid_argument);
  CHECK_THROWS_AS(factor_F(1, -1), std::invalid_argument);
}

TEST_CASE("factorization of popularity under prepended ascents") {
  const CensusOptions opts = fast_opts();
  const FactorizationReport base = factorization_check(0, parse_permutation("1"), 6, opts);
  CHECK(base.factor_identity);
  CHECK(base.restricted_identity);
  CHECK(base.pass());

  const FactorizationReport one = factorization_check(1, parse_permutation("21"), 7, opts);
  CHECK(one.pass());

  const FactorizationReport two = factorization_check(2, parse_permutation("312"), 8, opts);
  CHECK(two.m == 2);
  CHECK(two.N == 8);
  CHECK(two.factor_identity);
  CHECK(two.restricted_identity);
  CHECK(two.pass());

  CHECK_THROWS_AS(factorization_check(-1, parse_permutation("21"), 6), std::invalid_argument);
  CHECK_THROWS_AS(factorization_check(1, parse_permutation("12"), 6), std::invalid_argument);
  CHECK_THROWS_AS(factorization_check(1, parse_permutation("2413"), 6), not_separable);
}

TEST_CASE("peak-pattern popularity: product formula matches the census") {
  const int N = 8;
  for (int w = 1; w <= 4; ++w) {
    for (const Partition& lambda : partitions_of(w)) {
      const Permutation rep = wedge(lambda).second;
      CHECK(wedge_popularity(lambda, N) == popularity_series(rep, N, fast_opts()));
    }
  }
  CHECK_THROWS_AS(wedge_popularity(Partition{}, 8), std::invalid_argument);
  CHECK_THROWS_AS(wedge_popularity(Partition({4}), 4), std::invalid_argument);
}

TEST_CASE("popularity series separate the classes at the identification horizon") {
  for (int w = 1; w <= 5; ++w) {
    const auto parts = partitions_of(w);
    const int N = w + 5;
    std::vector<TruncatedSeries> values;
    values.reserve(parts.size());
    for (const auto& lambda : parts) values.push_back(wedge_popularity(lambda, N));
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j)
        CHECK_FALSE(values[i] == values[j]);
  }
}

TEST_CASE("recovering the class label from a series") {
  const int n = 4;
  const int N = 7;
  for (const Partition& lambda : partitions_of(n - 1))
    CHECK(identify_partition(wedge_popularity(lambda, N), n, N) == lambda);

  CHECK(identify_partition(increasing_popularity_formula(1, 7), 1, 7) == Partition{});

  CHECK_THROWS_AS(identify_partition(schroder_series(7), 4, 7), identification_error);
  CHECK_THROWS_AS(identify_partition(wedge_popularity(Partition({3}), 7), 4, 6),
                  std::invalid_argument);
  CHECK_THROWS_AS(identify_partition(wedge_popularity(Partition({3}), 7), 4, 8),
                  std::invalid_argument);
  CHECK_THROWS_AS(identify_partition(schroder_series(7), 0, 7), std::invalid_argument);
}
