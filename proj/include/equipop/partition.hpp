#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "equipop/errors.hpp"

namespace equipop {

// An integer partition: weakly decreasing positive parts. The empty partition
// (weight 0) is allowed; it is the signature of a single-leaf tree.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be >= 1");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[static_cast<std::size_t>(i)]);
  }
  return out;
}

inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw parse_error("partition: empty part");
    std::size_t pos = 0;
    int x = 0;
    try {
      x = std::stoi(cur, &pos);
    } catch (const std::exception&) {
      throw parse_error("partition: invalid part '" + cur + "'");
    }
    if (pos != cur.size()) throw parse_error("partition: invalid part '" + cur + "'");
    parts.push_back(x);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  if (!cur.empty() || !parts.empty()) flush();
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("partition: ") + e.what());
  }
}

// All partitions of m in descending lexicographic order of part sequences.
inline std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int cap) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int part = std::min(rem, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, rem - part, part);
      cur.pop_back();
    }
  };
  rec(rec, m, m == 0 ? 1 : m);
  return out;
}

}  // namespace equipop
