#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "equipop/tree.hpp"

namespace equipop {

// Exchange moves on a tree, addressed by node paths. For transport_marks the
// paths refer to the reduced skeleton of the marked tree.
struct SubtreeExchange {
  NodePath v, w;
  bool operator==(const SubtreeExchange&) const = default;
};

struct ForestExchange {
  NodePath a;
  bool operator==(const ForestExchange&) const = default;
};

struct ComplementMove {
  bool operator==(const ComplementMove&) const = default;
};

using Move = std::variant<SubtreeExchange, ForestExchange, ComplementMove>;

// Swap the subtrees rooted at two non-ancestral nodes, then recompute all
// signs by depth parity, keeping the root sign. Preserves leaf count and
// signature.
inline DecompositionTree subtree_exchange(const DecompositionTree& t, const NodePath& v,
                                          const NodePath& w) {
  if (path_is_prefix(v, w) || path_is_prefix(w, v))
    throw std::invalid_argument("subtree_exchange: nodes must not be ancestors of one another");
  subtree_at(t, v);
  subtree_at(t, w);
  detail::RawTree raw = detail::to_raw(t);
  detail::RawTree sub_v = detail::raw_at(raw, v);
  detail::RawTree sub_w = detail::raw_at(raw, w);
  detail::raw_at(raw, v) = std::move(sub_w);
  detail::raw_at(raw, w) = std::move(sub_v);
  return detail::from_raw(raw, t.sign());
}

// Exchange the non-rightmost forests of an internal node a and of its
// rightmost child b (which must be internal), then recompute signs by depth
// parity. Swaps the two spine arities; preserves leaf count and signature.
inline DecompositionTree forest_exchange(const DecompositionTree& t, const NodePath& a) {
  const DecompositionTree& node_a = subtree_at(t, a);
  if (node_a.is_leaf()) throw std::invalid_argument("forest_exchange: node a must be internal");
  if (node_a.children().back().is_leaf())
    throw std::invalid_argument("forest_exchange: rightmost child of a must be internal");
  detail::RawTree raw = detail::to_raw(t);
  detail::RawTree& ra = detail::raw_at(raw, a);
  detail::RawTree rb = std::move(ra.kids.back());
  ra.kids.pop_back();                                  // ra.kids is now the forest F
  detail::RawTree rc = std::move(rb.kids.back());
  rb.kids.pop_back();                                  // rb.kids is now the forest G
  std::swap(ra.kids, rb.kids);
  rb.kids.push_back(std::move(rc));
  ra.kids.push_back(std::move(rb));
  return detail::from_raw(raw, t.sign());
}

inline DecompositionTree apply_move(const DecompositionTree& t, const Move& m) {
  if (const auto* se = std::get_if<SubtreeExchange>(&m)) return subtree_exchange(t, se->v, se->w);
  if (const auto* fe = std::get_if<ForestExchange>(&m)) return forest_exchange(t, fe->a);
  return tree_symmetry(t, SymmetryElement::complement);
}

// A decomposition tree with a nonempty set of marked leaves (0-based,
// left-to-right). The pattern of the marking is its reduced skeleton.
struct MarkedTree {
  DecompositionTree tree;
  std::vector<int> marks;  // sorted, distinct

  bool operator==(const MarkedTree& o) const { return tree == o.tree && marks == o.marks; }
};

inline MarkedTree make_marked(DecompositionTree tree, std::vector<int> marks) {
  const int n = tree.leaf_count();
  if (marks.empty()) throw std::invalid_argument("MarkedTree: empty mark set");
  std::sort(marks.begin(), marks.end());
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i] < 0 || marks[i] >= n) throw std::invalid_argument("MarkedTree: mark out of range");
    if (i > 0 && marks[i] == marks[i - 1])
      throw std::invalid_argument("MarkedTree: duplicate mark");
  }
  return MarkedTree{std::move(tree), std::move(marks)};
}

inline DecompositionTree reduced_skeleton_of(const MarkedTree& m) {
  return reduced_skeleton(m.tree, m.marks);
}

inline std::string to_string(const MarkedTree& m) {
  std::string out = to_string(m.tree);
  out += '|';
  for (std::size_t i = 0; i < m.marks.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m.marks[i]);
  }
  return out;
}

namespace detail {

inline const SkeletonNode* skel_at(const SkeletonNode& root, const NodePath& p) {
  const SkeletonNode* cur = &root;
  for (int step : p) {
    if (cur->leaf || step < 0 || step >= static_cast<int>(cur->children.size()))
      throw std::invalid_argument("transport_marks: path does not address a pattern node");
    cur = &cur->children[static_cast<std::size_t>(step)];
  }
  return cur;
}

inline int skel_leaf_count(const SkeletonNode& s) {
  if (s.leaf) return 1;
  int n = 0;
  for (const auto& c : s.children) n += skel_leaf_count(c);
  return n;
}

// Number of marked leaves below every node of the tree, keyed by node path.
inline std::map<NodePath, int> marked_count_map(const DecompositionTree& t,
                                                const std::vector<char>& marked) {
  std::map<NodePath, int> out;
  int leaf_idx = 0;
  NodePath cur;
  auto rec = [&](auto&& self, const DecompositionTree& node) -> int {
    int cnt = 0;
    if (node.is_leaf()) {
      cnt = marked[static_cast<std::size_t>(leaf_idx++)] ? 1 : 0;
    } else {
      for (int i = 0; i < node.arity(); ++i) {
        cur.push_back(i);
        cnt += self(self, node.children()[static_cast<std::size_t>(i)]);
        cur.pop_back();
      }
    }
    out[cur] = cnt;
    return cnt;
  };
  rec(rec, t);
  return out;
}

// Topmost tree node whose marked-leaf set is exactly the marks below the
// given pattern node, additionally required — when the pattern node is
// internal — to sit at the same depth parity as the node's topmost
// representative. The parity condition keeps every relocated sign level
// intact under the depth-based re-signing. For pattern nodes with a parent
// it is automatic (the walk stops one level below a representative of the
// pattern parent, pinning the parity), but for the pattern root the walk is
// bounded only by the tree root, and an odd-length climb would flip the
// pattern's signs. A leaf pattern node carries no sign of its own, so its
// walk is unrestricted and the parity it lands on is the automatic one.
inline NodePath exchange_anchor(const SkeletonNode& pattern_node,
                                const std::map<NodePath, int>& counts) {
  NodePath cur = pattern_node.t_nodes.front();
  const bool keep_parity = !pattern_node.leaf;
  const std::size_t parity = cur.size() % 2;
  NodePath best = cur;
  const int want = skel_leaf_count(pattern_node);
  while (!cur.empty()) {
    NodePath parent(cur.begin(), cur.end() - 1);
    if (counts.at(parent) != want) break;
    cur = std::move(parent);
    if (!keep_parity || cur.size() % 2 == parity) best = cur;
  }
  return best;
}

inline std::vector<int> remap_marks(const RawTree& raw, const std::vector<int>& old_marks) {
  std::vector<char> is_marked;
  for (int m : old_marks) {
    if (m >= static_cast<int>(is_marked.size())) is_marked.resize(static_cast<std::size_t>(m) + 1, 0);
    is_marked[static_cast<std::size_t>(m)] = 1;
  }
  std::vector<int> ids;
  collect_leaf_ids(raw, ids);
  std::vector<int> out;
  for (int pos = 0; pos < static_cast<int>(ids.size()); ++pos) {
    const int id = ids[static_cast<std::size_t>(pos)];
    if (id < static_cast<int>(is_marked.size()) && is_marked[static_cast<std::size_t>(id)])
      out.push_back(pos);
  }
  return out;
}

}  // namespace detail

// Carry a marking through an exchange performed on its reduced skeleton.
// The move's paths address nodes of the pattern; the returned tree has the
// same leaf count and is marked with the exchanged pattern. The construction
// is a bijection between the marked-tree sets of the two patterns.
inline MarkedTree transport_marks(const MarkedTree& m, const Move& move) {
  if (std::holds_alternative<ComplementMove>(move))
    throw std::invalid_argument("transport_marks: move must be a subtree or forest exchange");

  const int n = m.tree.leaf_count();
  std::vector<char> markmask(static_cast<std::size_t>(n), 0);
  for (int x : m.marks) markmask[static_cast<std::size_t>(x)] = 1;
  const auto skel = detail::build_skeleton(m.tree, markmask);
  const auto counts = detail::marked_count_map(m.tree, markmask);

  detail::RawTree raw = detail::to_raw(m.tree);

  if (const auto* se = std::get_if<SubtreeExchange>(&move)) {
    if (path_is_prefix(se->v, se->w) || path_is_prefix(se->w, se->v))
      throw std::invalid_argument("transport_marks: nodes must not be ancestors of one another");
    const NodePath cv = detail::exchange_anchor(*detail::skel_at(*skel, se->v), counts);
    const NodePath cw = detail::exchange_anchor(*detail::skel_at(*skel, se->w), counts);
    detail::RawTree sub_v = detail::raw_at(raw, cv);
    detail::RawTree sub_w = detail::raw_at(raw, cw);
    detail::raw_at(raw, cv) = std::move(sub_w);
    detail::raw_at(raw, cw) = std::move(sub_v);
  } else {
    const auto& fe = std::get<ForestExchange>(move);
    const detail::SkeletonNode* pa = detail::skel_at(*skel, fe.a);
    if (pa->leaf || pa->children.back().leaf)
      throw std::invalid_argument("transport_marks: rightmost child of a must be internal");
    const detail::SkeletonNode* pb = &pa->children.back();
    const detail::SkeletonNode* pc = &pb->children.back();
    const NodePath ap = detail::exchange_anchor(*pa, counts);
    const NodePath bp = detail::exchange_anchor(*pb, counts);
    const NodePath cp = detail::exchange_anchor(*pc, counts);
    // Slot replacement at the three anchors (strictly nested): c's piece
    // takes b's slot inside a's piece, the modified a-piece takes c's slot
    // inside b's piece, and the result takes a's slot in the whole tree.
    // Every unmarked level between representatives travels with its piece,
    // which is what keeps the map injective, and re-applying the same
    // exchange to the result undoes it.
    const NodePath b_rel(bp.begin() + static_cast<long>(ap.size()), bp.end());
    const NodePath c_rel(cp.begin() + static_cast<long>(bp.size()), cp.end());
    detail::RawTree A = detail::raw_at(raw, ap);
    detail::RawTree B = detail::raw_at(A, b_rel);
    detail::RawTree C = detail::raw_at(B, c_rel);
    detail::RawTree X = A;
    detail::raw_at(X, b_rel) = std::move(C);
    detail::RawTree Y = std::move(B);
    detail::raw_at(Y, c_rel) = std::move(X);
    detail::raw_at(raw, ap) = std::move(Y);
  }

  DecompositionTree out = detail::from_raw(raw, m.tree.sign());
  return MarkedTree{std::move(out), detail::remap_marks(raw, m.marks)};
}

// Canonical tree of a partition: a rightmost spine of one internal node per
// part, the i-th spine node carrying parts[i] leaf children before its spine
// child, the deepest carrying parts.back() + 1 leaves, root sign plus.
inline std::pair<DecompositionTree, Permutation> wedge(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("wedge: partition must be nonempty");
  const auto& parts = lambda.parts();
  const int k = static_cast<int>(parts.size());
  const Sign deepest_sign = (k % 2 == 1) ? Sign::plus : Sign::minus;
  std::vector<DecompositionTree> kids(
      static_cast<std::size_t>(parts[static_cast<std::size_t>(k - 1)]) + 1,
      DecompositionTree::leaf());
  DecompositionTree cur = DecompositionTree::internal(deepest_sign, std::move(kids));
  Sign sign = deepest_sign;
  for (int i = k - 2; i >= 0; --i) {
    sign = opposite(sign);
    std::vector<DecompositionTree> level(static_cast<std::size_t>(parts[static_cast<std::size_t>(i)]),
                                         DecompositionTree::leaf());
    level.push_back(std::move(cur));
    cur = DecompositionTree::internal(sign, std::move(level));
  }
  Permutation perm = compose(cur);
  return {std::move(cur), std::move(perm)};
}

struct CanonicalizeResult {
  DecompositionTree tree;
  std::vector<Move> moves;
};

namespace detail {

// Internal nodes of the rightmost spine, top to bottom, plus the rightmost
// leaf path.
inline std::pair<std::vector<NodePath>, NodePath> rightmost_spine(const DecompositionTree& t) {
  std::vector<NodePath> spine;
  NodePath cur;
  const DecompositionTree* node = &t;
  while (!node->is_leaf()) {
    spine.push_back(cur);
    cur.push_back(node->arity() - 1);
    node = &node->children().back();
  }
  return {std::move(spine), std::move(cur)};
}

inline std::map<NodePath, int> first_leaf_map(const DecompositionTree& t) {
  std::map<NodePath, int> out;
  int leaf_idx = 0;
  NodePath cur;
  auto rec = [&](auto&& self, const DecompositionTree& node) -> void {
    out[cur] = leaf_idx;
    if (node.is_leaf()) {
      ++leaf_idx;
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

}  // namespace detail

// Normal form: repeatedly exchange the rightmost leaf with the leftmost
// (then shallowest) off-spine internal node until every internal node lies on
// the rightmost spine; sort the spine arities into weakly decreasing order by
// adjacent forest exchanges; complement if the root sign is minus. The result
// is the wedge tree of the signature, and replaying the moves on the input
// reproduces it.
inline CanonicalizeResult canonicalize(const DecompositionTree& t) {
  CanonicalizeResult res{t, {}};
  if (t.is_leaf()) return res;

  while (true) {
    auto [spine, rightmost_leaf] = detail::rightmost_spine(res.tree);
    const auto firsts = detail::first_leaf_map(res.tree);
    const NodePath* best = nullptr;
    NodePath best_path;
    int best_first = 0;
    for (const auto& p : all_node_paths(res.tree)) {
      if (subtree_at(res.tree, p).is_leaf()) continue;
      if (std::find(spine.begin(), spine.end(), p) != spine.end()) continue;
      const int first = firsts.at(p);
      if (!best || first < best_first ||
          (first == best_first && p.size() < best_path.size())) {
        best_path = p;
        best_first = first;
        best = &best_path;
      }
    }
    if (!best) break;
    res.moves.push_back(SubtreeExchange{rightmost_leaf, best_path});
    res.tree = subtree_exchange(res.tree, rightmost_leaf, best_path);
  }

  while (true) {
    auto [spine, rl] = detail::rightmost_spine(res.tree);
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < spine.size(); ++i) {
      const int da = subtree_at(res.tree, spine[i]).arity();
      const int db = subtree_at(res.tree, spine[i + 1]).arity();
      if (da < db) {
        res.moves.push_back(ForestExchange{spine[i]});
        res.tree = forest_exchange(res.tree, spine[i]);
        swapped = true;
        break;
      }
    }
    if (!swapped) break;
  }

  if (res.tree.sign() == Sign::minus) {
    res.moves.push_back(ComplementMove{});
    res.tree = tree_symmetry(res.tree, SymmetryElement::complement);
  }
  return res;
}

}  // namespace equipop
