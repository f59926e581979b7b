#include "bicext/semigroup.hpp"

#include <algorithm>

#include "bicext/errors.hpp"

namespace bicext {

Element product(const Element& x, const Element& y) noexcept {
  if (x.is_zero() || y.is_zero()) {
    return Element::zero();
  }
  // (j1 - i2 + [a)) ∩ [b) and [a) ∩ (i2 - j1 + [b)) are final segments of ℤ
  // intersected with a final segment of ω, so they are never empty.
  if (x.j() <= y.i()) {
    return Element(x.i() - x.j() + y.i(), y.j(), std::max(y.level(), x.level() + x.j() - y.i()));
  }
  return Element(x.i(), x.j() - y.i() + y.j(), std::max(x.level(), y.level() + y.i() - x.j()));
}

Element multiply(const Element& x, const Element& y, const OmegaClosedFamily& fam) {
  if (!fam.contains(x)) throw ElementOutsideDomain(x, fam);
  if (!fam.contains(y)) throw ElementOutsideDomain(y, fam);
  return product(x, y);
}

Element invert(const Element& x) noexcept {
  if (x.is_zero()) return x;
  return Element(x.j(), x.i(), x.level());
}

bool is_idempotent(const Element& x) noexcept { return x.is_zero() || x.i() == x.j(); }

bool natural_leq(const Element& x, const Element& y, const OmegaClosedFamily& fam) {
  if (!fam.contains(x)) throw ElementOutsideDomain(x, fam);
  if (!fam.contains(y)) throw ElementOutsideDomain(y, fam);
  return x == product(y, product(invert(x), x));
}

BicyclicElement multiply_bicyclic(const BicyclicElement& x, const BicyclicElement& y) noexcept {
  const Nat overlap = std::min(x.l, y.k);
  return {x.k + y.k - overlap, x.l + y.l - overlap};
}

BicyclicElement normalize_bicyclic_word(std::string_view word) {
  // Scanning left to right, the reduced prefix is always q^k p^l; a q
  // cancels against a trailing p if there is one.
  BicyclicElement out;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    switch (word[pos]) {
    case 'p':
      ++out.l;
      break;
    case 'q':
      if (out.l > 0) {
        --out.l;
      } else {
        ++out.k;
      }
      break;
    default:
      throw InvalidSymbol(word[pos], pos);
    }
  }
  return out;
}

} // namespace bicext
