#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bicext/element.hpp"
#include "bicext/family.hpp"

namespace bicext {

/// α_{k,p} on {[0), [1)}: level 0 scales by k, level 1 maps (i, j) to
/// (p + ki, p + kj) and stays at [1). Requires k >= 1 and 0 <= p <= k - 1.
class AlphaKP {
public:
  AlphaKP(Nat k, Nat p);
  Nat k() const noexcept { return k_; }
  Nat p() const noexcept { return p_; }
  friend bool operator==(const AlphaKP&, const AlphaKP&) = default;

private:
  Nat k_;
  Nat p_;
};

/// β_{k,p} on {[0), [1)}: like α_{k,p} but level 1 lands in [0).
/// Requires k >= 2 and 1 <= p <= k - 1.
class BetaKP {
public:
  BetaKP(Nat k, Nat p);
  Nat k() const noexcept { return k_; }
  Nat p() const noexcept { return p_; }
  friend bool operator==(const BetaKP&, const BetaKP&) = default;

private:
  Nat k_;
  Nat p_;
};

/// α_[k] on {[0), [1), [2)}: levels 0 and 1 scale by k; level 2 maps (i, j)
/// to (k(i + 1) - 1, k(j + 1) - 1). Requires k >= 1.
class AlphaBracket {
public:
  explicit AlphaBracket(Nat k);
  Nat k() const noexcept { return k_; }
  friend bool operator==(const AlphaBracket&, const AlphaBracket&) = default;

private:
  Nat k_;
};

/// (i, j) -> (ki, kj) on the bicyclic monoid {[0)}. Requires k >= 1.
class Scale {
public:
  explicit Scale(Nat k);
  Nat k() const noexcept { return k_; }
  friend bool operator==(const Scale&, const Scale&) = default;

private:
  Nat k_;
};

/// Images of (1, 0, [m)), (0, 1, [m)) and every (0, 0, [a)) of the family,
/// where m is the family minimum. Every triple factors as
/// (1,0,[m))^i · (0,0,[a)) · (0,1,[m))^j, and the table is extended to the
/// whole semigroup along that factorization.
struct Generators {
  Element plus;
  Element minus;
  std::vector<Element> idempotents; // (0, 0, [a)) in increasing a
};

Generators generators_of(const OmegaClosedFamily& fam);

class GeneratorTable {
public:
  /// Throws InvalidParameters if `idempotent_images` does not have exactly the
  /// family's levels as keys, and ElementOutsideDomain for an image outside
  /// the family.
  GeneratorTable(OmegaClosedFamily family, Element plus_image, Element minus_image,
                 std::map<Nat, Element> idempotent_images);

  const OmegaClosedFamily& family() const noexcept { return family_; }
  const Element& plus_image() const noexcept { return plus_; }
  const Element& minus_image() const noexcept { return minus_; }
  const std::map<Nat, Element>& idempotent_images() const noexcept { return idempotents_; }
  const Element& idempotent_image(Nat level) const { return idempotents_.at(level); }

  friend bool operator==(const GeneratorTable&, const GeneratorTable&) = default;
  /// Canonical order: plus image, minus image, then idempotent images by level.
  friend bool operator<(const GeneratorTable& a, const GeneratorTable& b);

private:
  OmegaClosedFamily family_;
  Element plus_;
  Element minus_;
  std::map<Nat, Element> idempotents_;
};

using EndoSpec = std::variant<AlphaKP, BetaKP, AlphaBracket, Scale, GeneratorTable>;

/// The family the spec acts on; every spec maps its domain into itself.
OmegaClosedFamily domain_of(const EndoSpec& e);

/// Throws ElementOutsideDomain if x is not in the domain. Zero maps to zero.
Element apply_endo(const EndoSpec& e, const Element& x);

/// The generator table that tabulates e on its domain's generators.
GeneratorTable as_table(const EndoSpec& e);

/// The identity map of a family as a generator table.
GeneratorTable identity_table(const OmegaClosedFamily& fam);

/// True for the named specs that are identity maps (α_[1], α_{1,0}, scale 1).
bool is_named_identity(const EndoSpec& e);

/// e1 followed by e2, so apply(compose(e1, e2), x) = apply(e2, apply(e1, x))
/// whenever e2 is a homomorphism. Closed forms are returned where they exist:
///   α_[k1] α_[k2] = α_[k1 k2],  scale k1 then k2 = scale k1 k2,
///   α_{k1,p1} α_{k2,p2} = α_{k1 k2, p2 + k2 p1},
///   α_{k1,p1} β_{k2,p2} = β_{k1 k2, p2 + k2 p1},
///   β_{k1,p1} followed by α_{k2,p2} or β_{k2,p2} = β_{k1 k2, k2 p1}.
/// Everything else becomes a GeneratorTable. Throws FamilyMismatch if the
/// domains differ.
EndoSpec compose_endo(const EndoSpec& e1, const EndoSpec& e2);

/// The spec restricted to B_ω^sub, tabulated over sub's generators. Throws
/// FamilyMismatch if sub is not a subfamily of the domain and
/// NotClosedUnderRestriction with the offending generator if an image
/// leaves B_ω^sub.
GeneratorTable restrict_to(const EndoSpec& e, const OmegaClosedFamily& sub);

std::string to_string(const EndoSpec& e);

} // namespace bicext
