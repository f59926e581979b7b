#pragma once

#include <string_view>

#include "bicext/element.hpp"
#include "bicext/family.hpp"

namespace bicext {

/// Product of two triples in B_ω^F with both sets inductive:
///
///   j1 <= i2:  (i1 - j1 + i2, j2, [max(b, a + j1 - i2)))
///   j1 >= i2:  (i1, j1 - i2 + j2, [max(a, b + i2 - j1)))
///
/// Zero is absorbing. No family membership check; the result level always
/// stays within [min(a, b), max(a, b)].
Element product(const Element& x, const Element& y) noexcept;

/// Checked product: throws ElementOutsideDomain if an operand is not in fam.
Element multiply(const Element& x, const Element& y, const OmegaClosedFamily& fam);

/// (i, j, F)^-1 = (j, i, F); zero is its own inverse.
Element invert(const Element& x) noexcept;

bool is_idempotent(const Element& x) noexcept;

/// x ≼ y iff x = y · (x^-1 · x).
bool natural_leq(const Element& x, const Element& y, const OmegaClosedFamily& fam);

/// q^k p^l of the bicyclic monoid, i.e. the pair (k, l) of B_ω.
struct BicyclicElement {
  Nat k = 0;
  Nat l = 0;

  friend bool operator==(const BicyclicElement&, const BicyclicElement&) = default;
  friend auto operator<=>(const BicyclicElement&, const BicyclicElement&) = default;
};

BicyclicElement multiply_bicyclic(const BicyclicElement& x, const BicyclicElement& y) noexcept;

/// Reduces a word over {p, q} to q^k p^l by cancelling every "pq".
/// Throws InvalidSymbol on any other character.
BicyclicElement normalize_bicyclic_word(std::string_view word);

} // namespace bicext
