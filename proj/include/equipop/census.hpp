#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "equipop/errors.hpp"
#include "equipop/partition.hpp"
#include "equipop/permutation.hpp"
#include "equipop/series.hpp"
#include "equipop/symmetry.hpp"
#include "equipop/tree.hpp"

namespace equipop {

// Number of separable permutations of length n (s_0 = 1 by convention).
// Independent of both the enumerator and the generating function: counts
// sum-decomposables by their first indecomposable block and doubles.
inline BigInt schroder_count(int n) {
  if (n < 0) throw std::invalid_argument("schroder_count: negative length");
  std::vector<BigInt> s{1, 1};  // all separables
  std::vector<BigInt> a{0, 0};  // sum-decomposable separables
  for (int m = 2; m <= n; ++m) {
    BigInt am = 0;
    for (int i = 1; i < m; ++i) {
      // sum-indecomposables of length i: the single point, or (i >= 2) the
      // skew-decomposables, as many as the sum-decomposables.
      const BigInt b = (i == 1) ? BigInt(1) : a[static_cast<std::size_t>(i)];
      am += b * s[static_cast<std::size_t>(m - i)];
    }
    a.push_back(am);
    s.push_back(2 * am);
  }
  return s[static_cast<std::size_t>(n)];
}

namespace detail {

// Memoized lists of separable permutations by length, split by structure.
// For length >= 2 the sum-indecomposables are exactly the skew-decomposables,
// so sum-decomposables are built from skew-decomposable first blocks.
class SeparableCache {
 public:
  static SeparableCache& instance() {
    static SeparableCache c;
    return c;
  }

  std::vector<Permutation> all(int n) { return fetch(n, 0); }
  std::vector<Permutation> sum_dec(int n) { return fetch(n, 1); }
  std::vector<Permutation> skew_dec(int n) { return fetch(n, 2); }

 private:
  std::vector<Permutation> fetch(int n, int which) {
    if (n < 1) throw std::invalid_argument("enumerate_separable: length must be positive");
    std::lock_guard<std::mutex> lock(mu_);
    ensure(n);
    const auto& row = which == 0 ? all_ : which == 1 ? sum_ : skew_;
    return row[static_cast<std::size_t>(n)];
  }

  void ensure(int n) {
    while (static_cast<int>(all_.size()) <= n) {
      const int m = static_cast<int>(all_.size());
      std::vector<Permutation> sum, skew, all;
      if (m == 0) {
        // index 0 unused
      } else if (m == 1) {
        all.push_back(Permutation::identity(1));
      } else {
        for (int i = 1; i < m; ++i) {
          const std::vector<Permutation> firsts =
              (i == 1) ? std::vector<Permutation>{Permutation::identity(1)}
                       : skew_[static_cast<std::size_t>(i)];
          for (const auto& alpha : firsts)
            for (const auto& beta : all_[static_cast<std::size_t>(m - i)])
              sum.push_back(direct_sum(alpha, beta));
        }
        for (const auto& p : sum) skew.push_back(apply_symmetry(p, SymmetryElement::complement));
        std::sort(sum.begin(), sum.end());
        std::sort(skew.begin(), skew.end());
        all = sum;
        all.insert(all.end(), skew.begin(), skew.end());
        std::sort(all.begin(), all.end());
      }
      all_.push_back(std::move(all));
      sum_.push_back(std::move(sum));
      skew_.push_back(std::move(skew));
    }
  }

  std::mutex mu_;
  std::vector<std::vector<Permutation>> all_, sum_, skew_;
};

inline std::uint32_t pack_ranks(const int* ranks, int k) {
  std::uint32_t key = 0;
  for (int i = 0; i < k; ++i) key |= static_cast<std::uint32_t>(ranks[i]) << (4 * i);
  return key;
}

}  // namespace detail

// All separable permutations of length n in lexicographic order.
inline std::vector<Permutation> enumerate_separable(int n) {
  return detail::SeparableCache::instance().all(n);
}

enum class StructuralFilter { all, sum_decomposable, skew_decomposable, sum_indecomposable, skew_indecomposable };

inline StructuralFilter parse_filter(const std::string& s) {
  if (s == "all") return StructuralFilter::all;
  if (s == "sum-decomposable") return StructuralFilter::sum_decomposable;
  if (s == "skew-decomposable") return StructuralFilter::skew_decomposable;
  if (s == "sum-indecomposable") return StructuralFilter::sum_indecomposable;
  if (s == "skew-indecomposable") return StructuralFilter::skew_indecomposable;
  throw parse_error("unknown filter '" + s + "'");
}

struct CensusOptions {
  int threads = 1;
  long long budget = 100000000;  // cap on s_N * C(N,k) windows
};

// Occurrence counts of every separable pattern of length k across all
// separable permutations of lengths k..N, collected in one pass per host,
// with per-host structural splits for the restricted series.
struct PopularityTable {
  int k = 0;
  int N = 0;
  std::vector<Permutation> patterns;                     // lex order
  std::vector<std::vector<long long>> counts;            // [pattern][n-k]
  std::vector<std::vector<long long>> counts_sum_dec;    // hosts that are direct sums
  std::vector<std::vector<long long>> counts_skew_dec;   // hosts that are skew sums

  int index_of(const Permutation& sigma) const {
    if (static_cast<int>(sigma.size()) != k)
      throw std::invalid_argument("PopularityTable: pattern has the wrong length");
    const auto it = std::lower_bound(patterns.begin(), patterns.end(), sigma);
    if (it == patterns.end() || !(*it == sigma)) throw not_separable("pattern is not separable");
    return static_cast<int>(it - patterns.begin());
  }

  std::vector<long long> filtered_row(const Permutation& sigma, StructuralFilter f) const {
    const auto i = static_cast<std::size_t>(index_of(sigma));
    switch (f) {
      case StructuralFilter::all:
        return counts[i];
      case StructuralFilter::sum_decomposable:
        return counts_sum_dec[i];
      case StructuralFilter::skew_decomposable:
        return counts_skew_dec[i];
      case StructuralFilter::sum_indecomposable: {
        auto r = counts[i];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= counts_sum_dec[i][j];
        return r;
      }
      case StructuralFilter::skew_indecomposable: {
        auto r = counts[i];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= counts_skew_dec[i][j];
        return r;
      }
    }
    throw std::logic_error("PopularityTable: bad filter");
  }
};

inline PopularityTable popularity_table(int k, int N, const CensusOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("popularity_table: pattern length must be positive");
  if (k > 8) throw std::invalid_argument("popularity_table: pattern length above 8 not supported");
  if (N < k) throw std::invalid_argument("popularity_table: max length below pattern length");

  const BigInt windows = schroder_count(N) * binomial(N, k);
  if (windows > BigInt(static_cast<long>(opts.budget)))
    throw budget_exceeded("census budget exceeded: " + windows.get_str() + " windows at n=" +
                          std::to_string(N) + " over budget " + std::to_string(opts.budget));

  PopularityTable table;
  table.k = k;
  table.N = N;
  table.patterns = enumerate_separable(k);
  const std::size_t rows = table.patterns.size();
  const std::size_t cols = static_cast<std::size_t>(N - k) + 1;
  table.counts.assign(rows, std::vector<long long>(cols, 0));
  table.counts_sum_dec.assign(rows, std::vector<long long>(cols, 0));
  table.counts_skew_dec.assign(rows, std::vector<long long>(cols, 0));

  std::unordered_map<std::uint32_t, int> row_of;
  row_of.reserve(rows * 2);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<int> vals(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) vals[static_cast<std::size_t>(j)] = table.patterns[i][j];
    row_of[detail::pack_ranks(vals.data(), k)] = static_cast<int>(i);
  }

  struct Local {
    std::vector<std::vector<long long>> counts, sum_dec, skew_dec;
  };

  auto scan = [&](const std::vector<Permutation>& hosts, int n, std::size_t begin,
                  std::size_t step, Local& local) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::vector<int> vals(static_cast<std::size_t>(k));
    std::vector<int> ranks(static_cast<std::size_t>(k));
    const std::size_t col = static_cast<std::size_t>(n - k);
    for (std::size_t h = begin; h < hosts.size(); h += step) {
      const Permutation& host = hosts[h];
      const bool sd = is_sum_decomposable(host);
      const bool kd = is_skew_decomposable(host);
      for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
      while (true) {
        for (int i = 0; i < k; ++i) vals[static_cast<std::size_t>(i)] = host[comb[static_cast<std::size_t>(i)]];
        for (int i = 0; i < k; ++i) {
          int r = 1;
          for (int j = 0; j < k; ++j)
            if (vals[static_cast<std::size_t>(j)] < vals[static_cast<std::size_t>(i)]) ++r;
          ranks[static_cast<std::size_t>(i)] = r;
        }
        const std::size_t row =
            static_cast<std::size_t>(row_of.at(detail::pack_ranks(ranks.data(), k)));
        ++local.counts[row][col];
        if (sd) ++local.sum_dec[row][col];
        if (kd) ++local.skew_dec[row][col];
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  };

  const int T = std::max(1, opts.threads);
  for (int n = k; n <= N; ++n) {
    const std::vector<Permutation> hosts = enumerate_separable(n);
    std::vector<Local> locals(static_cast<std::size_t>(T));
    for (auto& l : locals) {
      l.counts.assign(rows, std::vector<long long>(cols, 0));
      l.sum_dec.assign(rows, std::vector<long long>(cols, 0));
      l.skew_dec.assign(rows, std::vector<long long>(cols, 0));
    }
    if (T == 1) {
      scan(hosts, n, 0, 1, locals[0]);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < T; ++t)
        pool.emplace_back(scan, std::cref(hosts), n, static_cast<std::size_t>(t),
                          static_cast<std::size_t>(T), std::ref(locals[static_cast<std::size_t>(t)]));
      for (auto& th : pool) th.join();
    }
    for (const auto& l : locals)
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          table.counts[i][j] += l.counts[i][j];
          table.counts_sum_dec[i][j] += l.sum_dec[i][j];
          table.counts_skew_dec[i][j] += l.skew_dec[i][j];
        }
  }
  return table;
}

inline TruncatedSeries restricted_popularity_series(const Permutation& sigma, int N,
                                                    StructuralFilter filter,
                                                    const CensusOptions& opts = {}) {
  if (sigma.size() == 0) throw std::invalid_argument("popularity series: pattern must be nonempty");
  if (!is_separable(sigma)) throw not_separable(to_string(sigma) + " is not separable");
  const int k = static_cast<int>(sigma.size());
  if (N < k) throw std::invalid_argument("popularity series: order below pattern length");
  const PopularityTable table = popularity_table(k, N, opts);
  const auto row = table.filtered_row(sigma, filter);
  TruncatedSeries s(N);
  for (int n = k; n <= N; ++n)
    s.set_coeff(n, Rational(static_cast<long>(row[static_cast<std::size_t>(n - k)])));
  return s;
}

inline TruncatedSeries popularity_series(const Permutation& sigma, int N,
                                         const CensusOptions& opts = {}) {
  return restricted_popularity_series(sigma, N, StructuralFilter::all, opts);
}

// Grouping of the length-k separable patterns by popularity over n = k..N,
// next to the grouping by signature.
struct ClassReport {
  int k = 0;
  int N = 0;
  std::vector<std::pair<std::vector<long long>, std::vector<Permutation>>> classes;
  std::vector<std::pair<Partition, std::vector<Permutation>>> signature_classes;
  bool matches = false;  // the two groupings coincide
};

inline ClassReport equipopularity_classes(int k, int N, const CensusOptions& opts = {}) {
  const PopularityTable table = popularity_table(k, N, opts);
  ClassReport report;
  report.k = k;
  report.N = N;

  std::map<std::vector<long long>, std::vector<Permutation>> by_window;
  std::map<Partition, std::vector<Permutation>> by_signature;
  for (std::size_t i = 0; i < table.patterns.size(); ++i) {
    by_window[table.counts[i]].push_back(table.patterns[i]);
    by_signature[signature(decompose(table.patterns[i]))].push_back(table.patterns[i]);
  }

  // Signature classes in the canonical partition order.
  for (const auto& lambda : partitions_of(k - 1)) {
    const auto it = by_signature.find(lambda);
    if (it != by_signature.end()) report.signature_classes.emplace_back(lambda, it->second);
  }
  for (const auto& [window, members] : by_window) report.classes.emplace_back(window, members);
  std::sort(report.classes.begin(), report.classes.end(),
            [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });

  std::set<std::vector<Permutation>> ga, gb;
  for (const auto& c : report.classes) ga.insert(c.second);
  for (const auto& c : report.signature_classes) gb.insert(c.second);
  report.matches = ga == gb;
  return report;
}

// Pass iff popularity classes equal signature classes exactly and the class
// count is the number of partitions of k-1. Distinct windows separate
// classes outright; equal windows certify equality only up to length N.
struct ClassificationCheck {
  int k = 0;
  int N = 0;
  bool grouping_matches = false;
  int class_count = 0;
  int expected_count = 0;
  bool pass() const { return grouping_matches && class_count == expected_count; }
};

inline ClassificationCheck verify_classification(int k, int N, const CensusOptions& opts = {}) {
  const ClassReport report = equipopularity_classes(k, N, opts);
  ClassificationCheck check;
  check.k = k;
  check.N = N;
  check.grouping_matches = report.matches;
  check.class_count = static_cast<int>(report.classes.size());
  check.expected_count = static_cast<int>(partitions_of(k - 1).size());
  return check;
}

inline std::string to_csv(const PopularityTable& table) {
  std::string out = "pattern";
  for (int n = table.k; n <= table.N; ++n) out += "," + std::to_string(n);
  out += "\n";
  for (std::size_t i = 0; i < table.patterns.size(); ++i) {
    out += display_string(table.patterns[i]);
    for (const auto v : table.counts[i]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

inline nlohmann::json to_json(const ClassReport& report) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [lambda, members] : report.signature_classes) {
    nlohmann::json patterns = nlohmann::json::array();
    for (const auto& p : members) patterns.push_back(display_string(p));
    classes.push_back({{"signature", to_string(lambda)}, {"patterns", patterns}});
  }
  return nlohmann::json{{"pattern_length", report.k},
                        {"horizon", report.N},
                        {"class_count", report.signature_classes.size()},
                        {"signature_matches_popularity", report.matches},
                        {"classes", classes}};
}

}  // namespace equipop
