#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equipop/errors.hpp"
#include "equipop/rational.hpp"

namespace equipop {

// A permutation of {1..n} in one-line notation. Values are 1-based, indices 0-based.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> values) : v_(std::move(values)) {
    const int n = static_cast<int>(v_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : v_) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("Permutation: values must be a bijection on 1..n");
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }

  static Permutation identity(int n) {
    if (n < 0) throw std::invalid_argument("identity: negative length");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return v_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

enum class PermStyle { spaces, commas, compact };

inline std::string to_string(const Permutation& p, PermStyle style = PermStyle::spaces) {
  std::string out;
  if (style == PermStyle::compact) {
    if (p.size() > 9)
      throw std::invalid_argument("to_string: compact permutation form requires length <= 9");
    for (int i = 0; i < p.size(); ++i) out += static_cast<char>('0' + p[i]);
    return out;
  }
  const char sep = style == PermStyle::commas ? ',' : ' ';
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(p[i]);
  }
  return out;
}

// Compact digits when possible, space-delimited otherwise. Used for display surfaces.
inline std::string display_string(const Permutation& p) {
  return to_string(p, p.size() <= 9 ? PermStyle::compact : PermStyle::spaces);
}

// Accepts compact digits ("24153") or space/comma delimited ("2,4,1,5,3").
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> vals;
  const bool delimited = text.find(' ') != std::string_view::npos ||
                         text.find(',') != std::string_view::npos || text.size() > 9;
  if (!delimited) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw parse_error("permutation: invalid character in compact form");
      vals.push_back(ch - '0');
    }
  } else {
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      std::size_t pos = 0;
      int x = 0;
      try {
        x = std::stoi(cur, &pos);
      } catch (const std::exception&) {
        throw parse_error("permutation: invalid entry '" + cur + "'");
      }
      if (pos != cur.size()) throw parse_error("permutation: invalid entry '" + cur + "'");
      vals.push_back(x);
      cur.clear();
    };
    for (char ch : text) {
      if (ch == ' ' || ch == ',')
        flush();
      else
        cur += ch;
    }
    flush();
  }
  if (vals.empty()) throw parse_error("permutation: empty input");
  try {
    return Permutation(std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("permutation: ") + e.what());
  }
}

// Pattern of the entries at a strictly increasing set of 0-based positions.
inline Permutation pattern_at(const Permutation& pi, std::span<const int> indices) {
  const int k = static_cast<int>(indices.size());
  for (int i = 0; i < k; ++i) {
    if (indices[static_cast<std::size_t>(i)] < 0 ||
        indices[static_cast<std::size_t>(i)] >= pi.size())
      throw std::invalid_argument("pattern_at: index out of range");
    if (i > 0 && indices[static_cast<std::size_t>(i)] <= indices[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("pattern_at: indices must be strictly increasing");
  }
  std::vector<int> pat(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    int rank = 1;
    for (int j = 0; j < k; ++j)
      if (pi[indices[static_cast<std::size_t>(j)]] < pi[indices[static_cast<std::size_t>(i)]])
        ++rank;
    pat[static_cast<std::size_t>(i)] = rank;
  }
  return Permutation(std::move(pat));
}

inline Permutation pattern_at(const Permutation& pi, const std::vector<int>& indices) {
  return pattern_at(pi, std::span<const int>(indices));
}

// Number of occurrences of sigma in pi, by direct enumeration of index windows.
// This is the trusted oracle; faster counting lives in the census layer.
inline long long occurrences(const Permutation& sigma, const Permutation& pi) {
  const int k = sigma.size();
  const int n = pi.size();
  if (k == 0) throw std::invalid_argument("occurrences: empty pattern");
  if (k > n) return 0;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  long long count = 0;
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k; ++b)
        if ((pi[idx[static_cast<std::size_t>(a)]] < pi[idx[static_cast<std::size_t>(b)]]) !=
            (sigma[a] < sigma[b])) {
          match = false;
          break;
        }
    if (match) ++count;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("direct_sum: both operands must be nonempty");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int i = 0; i < a.size(); ++i) v.push_back(a[i]);
  for (int i = 0; i < b.size(); ++i) v.push_back(b[i] + a.size());
  return Permutation(std::move(v));
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("skew_sum: both operands must be nonempty");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int i = 0; i < a.size(); ++i) v.push_back(a[i] + b.size());
  for (int i = 0; i < b.size(); ++i) v.push_back(b[i]);
  return Permutation(std::move(v));
}

// True when some proper prefix of pi is a permutation of {1..i}.
inline bool is_sum_decomposable(const Permutation& pi) {
  int mx = 0;
  for (int i = 0; i + 1 < pi.size(); ++i) {
    mx = std::max(mx, pi[i]);
    if (mx == i + 1) return true;
  }
  return false;
}

// True when some proper prefix of pi is a permutation of the top values {n-i+1..n}.
inline bool is_skew_decomposable(const Permutation& pi) {
  const int n = pi.size();
  int mn = n + 1;
  for (int i = 0; i + 1 < n; ++i) {
    mn = std::min(mn, pi[i]);
    if (mn == n - i) return true;
  }
  return false;
}

inline bool is_separable(const Permutation& pi) {
  static const Permutation b1(std::vector<int>{2, 4, 1, 3});
  static const Permutation b2(std::vector<int>{3, 1, 4, 2});
  if (pi.size() < 4) return true;
  return occurrences(b1, pi) == 0 && occurrences(b2, pi) == 0;
}

// Total occurrences of any fixed length-k pattern across the full symmetric group:
// n!/k! * C(n,k). Returns 0 when k > n.
inline BigInt symmetric_group_popularity(int k, int n) {
  if (k < 1) throw std::invalid_argument("symmetric_group_popularity: pattern length must be >= 1");
  if (n < 0) throw std::invalid_argument("symmetric_group_popularity: negative length");
  if (k > n) return 0;
  return factorial(n) / factorial(k) * binomial(n, k);
}

}  // namespace equipop
