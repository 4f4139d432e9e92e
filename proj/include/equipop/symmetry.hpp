#pragma once

#include <array>
#include <string_view>

#include "equipop/permutation.hpp"

namespace equipop {

// The eight symmetries of the permutation plot (the dihedral group of the square),
// generated by reverse (horizontal flip), complement (vertical flip) and inverse
// (transpose). Encoding: bit 2 = transpose first, bit 1 = then flip positions,
// bit 0 = then flip values.
enum class SymmetryElement : int {
  identity = 0,
  complement = 1,
  reverse = 2,
  reverse_complement = 3,
  inverse = 4,
  complement_inverse = 5,
  reverse_inverse = 6,
  reverse_complement_inverse = 7,
};

inline constexpr std::array<SymmetryElement, 8> all_symmetries = {
    SymmetryElement::identity,          SymmetryElement::complement,
    SymmetryElement::reverse,           SymmetryElement::reverse_complement,
    SymmetryElement::inverse,           SymmetryElement::complement_inverse,
    SymmetryElement::reverse_inverse,   SymmetryElement::reverse_complement_inverse,
};

namespace detail {
inline constexpr bool sym_swap(SymmetryElement g) { return (static_cast<int>(g) & 4) != 0; }
inline constexpr bool sym_negx(SymmetryElement g) { return (static_cast<int>(g) & 2) != 0; }
inline constexpr bool sym_negy(SymmetryElement g) { return (static_cast<int>(g) & 1) != 0; }
}  // namespace detail

// Composition g∘h: h acts first. Closed on the eight elements.
inline constexpr SymmetryElement compose(SymmetryElement g, SymmetryElement h) {
  using namespace detail;
  const bool s = sym_swap(g) != sym_swap(h);
  const bool a = sym_negx(g) != (sym_swap(g) ? sym_negy(h) : sym_negx(h));
  const bool b = sym_negy(g) != (sym_swap(g) ? sym_negx(h) : sym_negy(h));
  return static_cast<SymmetryElement>((s ? 4 : 0) | (a ? 2 : 0) | (b ? 1 : 0));
}

inline constexpr SymmetryElement inverse_of(SymmetryElement g) {
  for (SymmetryElement h : all_symmetries)
    if (compose(g, h) == SymmetryElement::identity) return h;
  return SymmetryElement::identity;  // unreachable
}

inline std::string_view name_of(SymmetryElement g) {
  switch (g) {
    case SymmetryElement::identity: return "identity";
    case SymmetryElement::complement: return "complement";
    case SymmetryElement::reverse: return "reverse";
    case SymmetryElement::reverse_complement: return "reverse-complement";
    case SymmetryElement::inverse: return "inverse";
    case SymmetryElement::complement_inverse: return "complement-inverse";
    case SymmetryElement::reverse_inverse: return "reverse-inverse";
    case SymmetryElement::reverse_complement_inverse: return "reverse-complement-inverse";
  }
  return "?";
}

// Acts on the plot {(i, pi(i))}: optional transpose, then the coordinate flips.
inline Permutation apply_symmetry(const Permutation& pi, SymmetryElement g) {
  using namespace detail;
  const int n = pi.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int x = i, y = pi[i - 1];
    if (sym_swap(g)) std::swap(x, y);
    if (sym_negx(g)) x = n + 1 - x;
    if (sym_negy(g)) y = n + 1 - y;
    out[static_cast<std::size_t>(x - 1)] = y;
  }
  return Permutation(std::move(out));
}

}  // namespace equipop
