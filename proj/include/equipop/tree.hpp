#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equipop/partition.hpp"
#include "equipop/permutation.hpp"
#include "equipop/symmetry.hpp"

namespace equipop {

enum class Sign { plus, minus };

inline constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Decomposition tree of a separable permutation: a plane tree whose internal
// nodes carry alternating signs and have at least two children each. Instances
// are valid by construction; the factories enforce both invariants.
class DecompositionTree {
 public:
  static DecompositionTree leaf() { return DecompositionTree(); }

  static DecompositionTree internal(Sign sign, std::vector<DecompositionTree> children) {
    if (children.size() < 2)
      throw std::invalid_argument("DecompositionTree: internal nodes need at least two children");
    for (const auto& c : children)
      if (!c.is_leaf() && c.sign() == sign)
        throw std::invalid_argument("DecompositionTree: adjacent internal nodes must alternate signs");
    DecompositionTree t;
    t.leaf_ = false;
    t.sign_ = sign;
    t.children_ = std::move(children);
    return t;
  }

  bool is_leaf() const { return leaf_; }
  Sign sign() const {
    if (leaf_) throw std::invalid_argument("DecompositionTree: leaves carry no sign");
    return sign_;
  }
  const std::vector<DecompositionTree>& children() const { return children_; }
  int arity() const { return static_cast<int>(children_.size()); }

  int leaf_count() const {
    if (leaf_) return 1;
    int n = 0;
    for (const auto& c : children_) n += c.leaf_count();
    return n;
  }

  bool operator==(const DecompositionTree& o) const {
    if (leaf_ != o.leaf_) return false;
    if (leaf_) return true;
    return sign_ == o.sign_ && children_ == o.children_;
  }

 private:
  DecompositionTree() = default;
  bool leaf_ = true;
  Sign sign_ = Sign::plus;
  std::vector<DecompositionTree> children_;
};

// Root-to-node addressing by child indices; the root is the empty path.
using NodePath = std::vector<int>;

inline bool path_is_prefix(const NodePath& a, const NodePath& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

inline const DecompositionTree& subtree_at(const DecompositionTree& t, const NodePath& path) {
  const DecompositionTree* cur = &t;
  for (int step : path) {
    if (cur->is_leaf() || step < 0 || step >= cur->arity())
      throw std::invalid_argument("subtree_at: path does not address a node");
    cur = &cur->children()[static_cast<std::size_t>(step)];
  }
  return *cur;
}

inline std::vector<NodePath> all_node_paths(const DecompositionTree& t) {
  std::vector<NodePath> out;
  NodePath cur;
  auto rec = [&](auto&& self, const DecompositionTree& node) -> void {
    out.push_back(cur);
    if (node.is_leaf()) return;
    for (int i = 0; i < node.arity(); ++i) {
      cur.push_back(i);
      self(self, node.children()[static_cast<std::size_t>(i)]);
      cur.pop_back();
    }
  };
  rec(rec, t);
  return out;
}

inline std::vector<NodePath> leaf_paths(const DecompositionTree& t) {
  std::vector<NodePath> out;
  NodePath cur;
  auto rec = [&](auto&& self, const DecompositionTree& node) -> void {
    if (node.is_leaf()) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < node.arity(); ++i) {
      cur.push_back(i);
      self(self, node.children()[static_cast<std::size_t>(i)]);
      cur.pop_back();
    }
  };
  rec(rec, t);
  return out;
}

namespace detail {

// Signless mutable mirror used for tree surgery. Leaves keep their original
// left-to-right index so marks can be tracked through exchanges; signs are
// recomputed by depth parity when converting back.
struct RawTree {
  bool leaf = true;
  int leaf_id = -1;
  std::vector<RawTree> kids;
};

inline RawTree to_raw(const DecompositionTree& t) {
  int next_id = 0;
  auto rec = [&](auto&& self, const DecompositionTree& node) -> RawTree {
    RawTree r;
    if (node.is_leaf()) {
      r.leaf_id = next_id++;
      return r;
    }
    r.leaf = false;
    r.kids.reserve(static_cast<std::size_t>(node.arity()));
    for (const auto& c : node.children()) r.kids.push_back(self(self, c));
    return r;
  };
  return rec(rec, t);
}

inline DecompositionTree from_raw(const RawTree& r, Sign root_sign) {
  auto rec = [&](auto&& self, const RawTree& node, Sign sign) -> DecompositionTree {
    if (node.leaf) return DecompositionTree::leaf();
    std::vector<DecompositionTree> kids;
    kids.reserve(node.kids.size());
    for (const auto& k : node.kids) kids.push_back(self(self, k, opposite(sign)));
    return DecompositionTree::internal(sign, std::move(kids));
  };
  return rec(rec, r, root_sign);
}

inline RawTree& raw_at(RawTree& t, const NodePath& path) {
  RawTree* cur = &t;
  for (int step : path) {
    if (cur->leaf || step < 0 || step >= static_cast<int>(cur->kids.size()))
      throw std::invalid_argument("raw_at: path does not address a node");
    cur = &cur->kids[static_cast<std::size_t>(step)];
  }
  return *cur;
}

inline void collect_leaf_ids(const RawTree& t, std::vector<int>& out) {
  if (t.leaf) {
    out.push_back(t.leaf_id);
    return;
  }
  for (const auto& k : t.kids) collect_leaf_ids(k, out);
}

}  // namespace detail

// Recursive block decomposition. Throws not_separable when the permutation
// contains 2413 or 3142 (equivalently, when no sum or skew split exists at
// some stage).
inline DecompositionTree decompose(const Permutation& pi) {
  if (pi.empty()) throw std::invalid_argument("decompose: empty permutation");
  auto rec = [](auto&& self, const std::vector<int>& v) -> DecompositionTree {
    const int n = static_cast<int>(v.size());
    if (n == 1) return DecompositionTree::leaf();

    auto split = [&](bool sum) -> std::optional<std::vector<DecompositionTree>> {
      std::vector<int> bounds;
      int mx = 0, mn = n + 1;
      for (int i = 0; i + 1 < n; ++i) {
        mx = std::max(mx, v[static_cast<std::size_t>(i)]);
        mn = std::min(mn, v[static_cast<std::size_t>(i)]);
        if (sum ? (mx == i + 1) : (mn == n - i)) bounds.push_back(i + 1);
      }
      if (bounds.empty()) return std::nullopt;
      bounds.push_back(n);
      std::vector<DecompositionTree> kids;
      int start = 0;
      for (int b : bounds) {
        std::vector<int> part(v.begin() + start, v.begin() + b);
        const int lo = *std::min_element(part.begin(), part.end());
        for (int& x : part) x -= lo - 1;
        kids.push_back(self(self, part));
        start = b;
      }
      return kids;
    };

    if (auto kids = split(true)) return DecompositionTree::internal(Sign::plus, std::move(*kids));
    if (auto kids = split(false)) return DecompositionTree::internal(Sign::minus, std::move(*kids));
    throw not_separable("decompose: permutation is not separable (contains 2413 or 3142)");
  };
  return rec(rec, pi.values());
}

inline Permutation compose(const DecompositionTree& t) {
  auto rec = [](auto&& self, const DecompositionTree& node) -> std::vector<int> {
    if (node.is_leaf()) return {1};
    std::vector<std::vector<int>> parts;
    parts.reserve(static_cast<std::size_t>(node.arity()));
    int total = 0;
    for (const auto& c : node.children()) {
      parts.push_back(self(self, c));
      total += static_cast<int>(parts.back().size());
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(total));
    if (node.sign() == Sign::plus) {
      int offset = 0;
      for (const auto& p : parts) {
        for (int x : p) out.push_back(x + offset);
        offset += static_cast<int>(p.size());
      }
    } else {
      int offset = total;
      for (const auto& p : parts) {
        offset -= static_cast<int>(p.size());
        for (int x : p) out.push_back(x + offset);
      }
    }
    return out;
  };
  return Permutation(rec(rec, t));
}

// Multiset of (arity - 1) over internal nodes, as a partition of leaf_count - 1.
inline Partition signature(const DecompositionTree& t) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, const DecompositionTree& node) -> void {
    if (node.is_leaf()) return;
    parts.push_back(node.arity() - 1);
    for (const auto& c : node.children()) self(self, c);
  };
  rec(rec, t);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

namespace detail {

// Annotated pattern node produced while restricting a tree to a leaf subset:
// records, for every pattern node, the tree nodes merged into it (topmost
// first), and for every pattern leaf the marked tree leaf it came from.
struct SkeletonNode {
  bool leaf = true;
  Sign sign = Sign::plus;
  std::vector<SkeletonNode> children;
  std::vector<NodePath> t_nodes;
};

inline std::optional<SkeletonNode> build_skeleton(const DecompositionTree& t,
                                                  const std::vector<char>& marked) {
  int leaf_idx = 0;
  NodePath cur;
  auto rec = [&](auto&& self, const DecompositionTree& node) -> std::optional<SkeletonNode> {
    if (node.is_leaf()) {
      const int idx = leaf_idx++;
      if (!marked[static_cast<std::size_t>(idx)]) return std::nullopt;
      SkeletonNode s;
      s.t_nodes.push_back(cur);
      return s;
    }
    std::vector<SkeletonNode> hits;
    for (int i = 0; i < node.arity(); ++i) {
      cur.push_back(i);
      auto r = self(self, node.children()[static_cast<std::size_t>(i)]);
      cur.pop_back();
      if (r) hits.push_back(std::move(*r));
    }
    if (hits.empty()) return std::nullopt;
    if (hits.size() == 1) return std::move(hits.front());
    SkeletonNode s;
    s.leaf = false;
    s.sign = node.sign();
    s.t_nodes.push_back(cur);
    for (auto& h : hits) {
      if (!h.leaf && h.sign == s.sign) {
        // Same-sign adjacency in the restriction: contract into this node.
        for (auto& hn : h.t_nodes) s.t_nodes.push_back(std::move(hn));
        for (auto& hc : h.children) s.children.push_back(std::move(hc));
      } else {
        s.children.push_back(std::move(h));
      }
    }
    return s;
  };
  return rec(rec, t);
}

inline DecompositionTree skeleton_to_tree(const SkeletonNode& s) {
  if (s.leaf) return DecompositionTree::leaf();
  std::vector<DecompositionTree> kids;
  kids.reserve(s.children.size());
  for (const auto& c : s.children) kids.push_back(skeleton_to_tree(c));
  return DecompositionTree::internal(s.sign, std::move(kids));
}

}  // namespace detail

// Restriction of the tree to a nonempty subset of its leaves (0-based,
// left-to-right positions): least common parents of the subset, with
// same-sign adjacencies contracted.
inline DecompositionTree reduced_skeleton(const DecompositionTree& t, const std::vector<int>& leaves) {
  const int n = t.leaf_count();
  if (leaves.empty()) throw std::invalid_argument("reduced_skeleton: empty leaf set");
  std::vector<char> marked(static_cast<std::size_t>(n), 0);
  for (int x : leaves) {
    if (x < 0 || x >= n) throw std::invalid_argument("reduced_skeleton: leaf index out of range");
    if (marked[static_cast<std::size_t>(x)])
      throw std::invalid_argument("reduced_skeleton: duplicate leaf index");
    marked[static_cast<std::size_t>(x)] = 1;
  }
  auto s = detail::build_skeleton(t, marked);
  return detail::skeleton_to_tree(*s);
}

// Occurrence count computed on the tree side: the number of leaf subsets of
// the decomposition tree of pi whose reduced skeleton equals the tree of sigma.
inline long long occurrences_by_skeleton(const Permutation& sigma, const Permutation& pi) {
  if (sigma.empty()) throw std::invalid_argument("occurrences_by_skeleton: empty pattern");
  const DecompositionTree tsig = decompose(sigma);
  const DecompositionTree tpi = decompose(pi);
  const int n = pi.size(), k = sigma.size();
  if (k > n) return 0;
  std::vector<char> marked(static_cast<std::size_t>(n), 0);
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  long long count = 0;
  while (true) {
    std::fill(marked.begin(), marked.end(), 0);
    for (int i : idx) marked[static_cast<std::size_t>(i)] = 1;
    auto s = detail::build_skeleton(tpi, marked);
    if (detail::skeleton_to_tree(*s) == tsig) ++count;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

// Structural action of a plot symmetry on decomposition trees:
//   complement flips every sign; reverse flips every sign and mirrors all
//   children; inverse mirrors the children of minus nodes only.
inline DecompositionTree tree_symmetry(const DecompositionTree& t, SymmetryElement g) {
  auto map_tree = [](auto&& self, const DecompositionTree& node, bool flip, bool rev_all,
                     bool rev_minus) -> DecompositionTree {
    if (node.is_leaf()) return DecompositionTree::leaf();
    const Sign s = flip ? opposite(node.sign()) : node.sign();
    std::vector<DecompositionTree> kids;
    kids.reserve(static_cast<std::size_t>(node.arity()));
    for (const auto& c : node.children()) kids.push_back(self(self, c, flip, rev_all, rev_minus));
    const bool mirror = rev_all != (rev_minus && node.sign() == Sign::minus);
    if (mirror) std::reverse(kids.begin(), kids.end());
    return DecompositionTree::internal(s, std::move(kids));
  };
  DecompositionTree out = t;
  // Generator order mirrors apply_symmetry: transpose first, then the flips.
  if (detail::sym_swap(g)) out = map_tree(map_tree, out, false, false, true);
  if (detail::sym_negx(g)) out = map_tree(map_tree, out, true, true, false);
  if (detail::sym_negy(g)) out = map_tree(map_tree, out, true, false, false);
  return out;
}

inline std::string to_string(const DecompositionTree& t) {
  std::string out;
  auto rec = [&](auto&& self, const DecompositionTree& node) -> void {
    if (node.is_leaf()) {
      out += '.';
      return;
    }
    out += node.sign() == Sign::plus ? '+' : '-';
    out += '(';
    for (int i = 0; i < node.arity(); ++i) {
      if (i) out += ',';
      self(self, node.children()[static_cast<std::size_t>(i)]);
    }
    out += ')';
  };
  rec(rec, t);
  return out;
}

inline DecompositionTree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw parse_error("tree: " + msg + " at offset " + std::to_string(pos));
  };
  auto rec = [&](auto&& self) -> DecompositionTree {
    if (pos >= text.size()) fail("unexpected end of input");
    const char ch = text[pos];
    if (ch == '.') {
      ++pos;
      return DecompositionTree::leaf();
    }
    if (ch != '+' && ch != '-') fail("expected '.', '+' or '-'");
    const Sign sign = ch == '+' ? Sign::plus : Sign::minus;
    ++pos;
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<DecompositionTree> kids;
    kids.push_back(self(self));
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      kids.push_back(self(self));
    }
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;
    try {
      return DecompositionTree::internal(sign, std::move(kids));
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string("tree: ") + e.what());
    }
  };
  DecompositionTree t = rec(rec);
  if (pos != text.size()) fail("trailing input");
  return t;
}

}  // namespace equipop
