#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bicext/element.hpp"

namespace bicext {

/// First (a, b, n) for which max(a, b - n) is missing from a family of lower
/// bounds, i.e. [a) ∩ (-n + [b)) is not a member.
struct ClosureWitness {
  Nat a;
  Nat b;
  Nat n;

  friend bool operator==(const ClosureWitness&, const ClosureWitness&) = default;
};

/// A finite ω-closed family of nonempty inductive sets, optionally with ∅.
///
/// Only obtainable through validate(), so every instance is ω-closed. For
/// inductive sets ω-closure forces the lower bounds to be a contiguous
/// interval {m, ..., M}.
class OmegaClosedFamily {
public:
  /// Sorts and deduplicates `lower_bounds`, then checks ω-closure.
  /// Throws InvalidFamily on an empty list or a negative bound and
  /// NotOmegaClosed on the first closure violation.
  static OmegaClosedFamily validate(std::vector<Nat> lower_bounds, bool contains_empty = false);

  /// Scans a, b over the sorted bounds and n over {0, ..., max}. Larger n need
  /// no test: once b - n <= a the value max(a, b - n) is a itself.
  static std::optional<ClosureWitness> find_violation(std::span<const Nat> sorted_bounds);

  const std::vector<Nat>& lower_bounds() const noexcept { return bounds_; }
  bool contains_empty() const noexcept { return contains_empty_; }
  std::size_t size() const noexcept { return bounds_.size(); }
  Nat min_bound() const noexcept { return bounds_.front(); }
  Nat max_bound() const noexcept { return bounds_.back(); }
  bool is_normalized() const noexcept { return min_bound() == 0; }

  bool contains_level(Nat level) const noexcept;
  bool contains(const Element& x) const noexcept;
  bool is_subfamily_of(const OmegaClosedFamily& other) const noexcept;

  /// (0, 0, [min)), the identity of B_ω^F.
  Element identity() const { return Element(0, 0, min_bound()); }

  friend bool operator==(const OmegaClosedFamily&, const OmegaClosedFamily&) = default;

private:
  OmegaClosedFamily(std::vector<Nat> bounds, bool contains_empty)
      : bounds_(std::move(bounds)), contains_empty_(contains_empty) {}

  std::vector<Nat> bounds_;
  bool contains_empty_ = false;
};

std::string to_string(const OmegaClosedFamily& fam);
std::ostream& operator<<(std::ostream& os, const OmegaClosedFamily& fam);

struct NormalizedFamily {
  OmegaClosedFamily family;
  Nat shift;
};

/// Shifts every lower bound down by the minimum so that [0) is a member.
NormalizedFamily normalize_family(const OmegaClosedFamily& fam);

/// (i, j, [a)) -> (i, j, [a - shift)); zero is fixed. This is the isomorphism
/// induced by normalize_family.
Element shift_level(const Element& x, Nat shift);

/// All triples with i, j <= n over the family in (i, j, level) order, followed
/// by zero when the family contains ∅.
std::vector<Element> elements_up_to(const OmegaClosedFamily& fam, Nat n);

namespace families {

OmegaClosedFamily single(Nat s);
/// {[0), [1)}
OmegaClosedFamily f2();
/// {[0), [1), [2)}
OmegaClosedFamily f3();
/// {[1), [2)}
OmegaClosedFamily f12();

} // namespace families

} // namespace bicext
