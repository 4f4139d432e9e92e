#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "equipop/partition.hpp"
#include "equipop/permutation.hpp"
#include "equipop/rational.hpp"
#include "equipop/symmetry.hpp"

using namespace equipop;

TEST_CASE("permutation parsing and printing") {
  const Permutation p = parse_permutation("24153");
  CHECK(p.size() == 5);
  CHECK(p[0] == 2);
  CHECK(p[4] == 3);
  CHECK(display_string(p) == "24153");
  CHECK(parse_permutation("2,4,1,5,3") == p);
  CHECK(parse_permutation("2 4 1 5 3") == p);
  CHECK(to_string(p, PermStyle::commas) == "2,4,1,5,3");

  std::vector<int> big;
  for (int i = 12; i >= 1; --i) big.push_back(i);
  const Permutation q(big);
  CHECK(parse_permutation(display_string(q)) == q);

  CHECK_THROWS_AS(parse_permutation("1 2 2"), parse_error);
  CHECK_THROWS_AS(parse_permutation("1 3"), parse_error);
  CHECK_THROWS_AS(parse_permutation(""), parse_error);
  CHECK_THROWS_AS(parse_permutation("0 1"), parse_error);
}

TEST_CASE("pattern extraction and occurrence counting") {
  const Permutation p = parse_permutation("24153");
  CHECK(pattern_at(p, {0, 2, 4}) == parse_permutation("213"));
  CHECK(pattern_at(p, {0, 1}) == parse_permutation("12"));
  CHECK(pattern_at(p, {0, 1, 2, 3, 4}) == p);

  CHECK(occurrences(parse_permutation("312"), p) == 1);
  CHECK(occurrences(parse_permutation("12"), parse_permutation("2413")) == 3);
  CHECK(occurrences(parse_permutation("1"), p) == 5);
  CHECK(occurrences(parse_permutation("123"), Permutation::identity(6)) == 20);
  CHECK(occurrences(parse_permutation("21"), parse_permutation("321")) == 3);
  CHECK(occurrences(parse_permutation("123456"), p) == 0);
}

TEST_CASE("sums and decomposability") {
  CHECK(direct_sum(parse_permutation("132"), parse_permutation("21")) ==
        parse_permutation("13254"));
  CHECK(skew_sum(parse_permutation("12"), parse_permutation("12")) == parse_permutation("3412"));

  CHECK(is_sum_decomposable(parse_permutation("132")));
  CHECK(!is_sum_decomposable(parse_permutation("21")));
  CHECK(is_skew_decomposable(parse_permutation("21")));
  CHECK(!is_skew_decomposable(parse_permutation("132")));
  CHECK(!is_sum_decomposable(parse_permutation("1")));
  CHECK(!is_skew_decomposable(parse_permutation("1")));

  CHECK(!is_separable(parse_permutation("2413")));
  CHECK(!is_separable(parse_permutation("3142")));
  CHECK(!is_separable(parse_permutation("24153")));  // 2413 sits at positions 1,2,3,5
  CHECK(is_separable(parse_permutation("13254")));
  CHECK(is_separable(parse_permutation("215643798")));

  // Splitting a direct sum: prefix {1..i} occupies the first i positions.
  const Permutation s = direct_sum(parse_permutation("21"), parse_permutation("132"));
  CHECK(is_sum_decomposable(s));
  CHECK(pattern_at(s, {0, 1}) == parse_permutation("21"));
}

TEST_CASE("whole symmetric group popularity") {
  CHECK(symmetric_group_popularity(1, 3) == BigInt(18));
  CHECK(symmetric_group_popularity(2, 4) == BigInt(72));
  CHECK(symmetric_group_popularity(3, 3) == BigInt(1));
  CHECK(symmetric_group_popularity(2, 2) == BigInt(1));

  // n!/k! * C(n,k) really is the brute-force total, and it does not depend
  // on which pattern of length k is counted.
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> kv(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) kv[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> sigmas;
    do sigmas.emplace_back(kv);
    while (std::next_permutation(kv.begin(), kv.end()));

    for (int n = k; n <= 6; ++n) {
      std::vector<int> nv(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) nv[static_cast<std::size_t>(i)] = i + 1;
      std::vector<long long> totals(sigmas.size(), 0);
      do {
        const Permutation host(nv);
        for (std::size_t s = 0; s < sigmas.size(); ++s)
          totals[s] += occurrences(sigmas[s], host);
      } while (std::next_permutation(nv.begin(), nv.end()));
      for (const long long t : totals) CHECK(BigInt(static_cast<long>(t)) == symmetric_group_popularity(k, n));
    }
  }
}

TEST_CASE("symmetry group structure") {
  CHECK(all_symmetries.size() == 8);

  std::set<std::string_view> names;
  for (const auto g : all_symmetries) names.insert(name_of(g));
  CHECK(names.size() == 8);

  for (const auto g : all_symmetries) {
    CHECK(compose(g, SymmetryElement::identity) == g);
    CHECK(compose(SymmetryElement::identity, g) == g);
    CHECK(compose(g, inverse_of(g)) == SymmetryElement::identity);
    CHECK(compose(inverse_of(g), g) == SymmetryElement::identity);
  }

  const Permutation p = parse_permutation("24153");
  CHECK(apply_symmetry(p, SymmetryElement::reverse) == parse_permutation("35142"));
  CHECK(apply_symmetry(p, SymmetryElement::complement) == parse_permutation("42513"));
  CHECK(apply_symmetry(p, SymmetryElement::inverse) == parse_permutation("31524"));

  // compose(g, h) acts as h first, then g.
  for (const auto g : all_symmetries)
    for (const auto h : all_symmetries)
      CHECK(apply_symmetry(apply_symmetry(p, h), g) == apply_symmetry(p, compose(g, h)));

  // Occurrence counts are symmetry-invariant.
  const Permutation sigma = parse_permutation("132");
  const Permutation host = parse_permutation("215643798");
  for (const auto g : all_symmetries)
    CHECK(occurrences(apply_symmetry(sigma, g), apply_symmetry(host, g)) ==
          occurrences(sigma, host));
}

TEST_CASE("partitions") {
  CHECK(to_string(parse_partition("3,2,1,1,1")) == "3,2,1,1,1");
  CHECK(parse_partition("4").parts() == std::vector<int>{4});
  CHECK_THROWS_AS(parse_partition("1,2"), parse_error);
  CHECK_THROWS_AS(parse_partition("0"), parse_error);
  CHECK(parse_partition("").weight() == 0);  // the empty partition round-trips

  const int p_values[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto parts = partitions_of(n);
    CHECK(static_cast<int>(parts.size()) == p_values[n]);
    std::set<Partition> seen(parts.begin(), parts.end());
    CHECK(seen.size() == parts.size());
    for (const auto& lambda : parts) {
      CHECK(lambda.weight() == n);
      const auto& v = lambda.parts();
      CHECK(std::is_sorted(v.begin(), v.end(), std::greater<int>()));
    }
  }
  const auto of4 = partitions_of(4);
  CHECK(std::find(of4.begin(), of4.end(), parse_partition("2,1,1")) != of4.end());
}

TEST_CASE("big integers and rationals") {
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(10, 4) == BigInt(210));
  CHECK(binomial(4, 7) == BigInt(0));
  CHECK(to_fraction_string(Rational(3, 6)) == "1/2");
  CHECK(to_fraction_string(Rational(8, 4)) == "2");
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(binomial(Rational(-3, 2), 1) == Rational(-3, 2));
  CHECK(binomial(Rational(5), 0) == Rational(1));
}
