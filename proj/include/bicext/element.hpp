#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bicext {

/// An element of ω. Signed so that intermediate shifts such as a + j1 - i2
/// can go negative before being clamped; stored domain values are >= 0.
using Nat = std::int64_t;

/// A nonempty inductive subset of ω. Every such set is a final segment
/// [a) = {x : x >= a}, so it is stored by its lower bound alone.
class InductiveSet {
public:
  explicit InductiveSet(Nat lower_bound);

  Nat lower_bound() const noexcept { return lower_bound_; }
  bool contains(Nat x) const noexcept { return x >= lower_bound_; }

  /// Membership vector for {0, ..., n}.
  std::vector<bool> truncate(Nat n) const;

  /// Recovers the set from a truncated membership vector. Returns nullopt if
  /// the truncation is empty or fails the inductivity predicate.
  static std::optional<InductiveSet> from_truncation(const std::vector<bool>& members);

  friend bool operator==(const InductiveSet&, const InductiveSet&) = default;
  friend auto operator<=>(const InductiveSet&, const InductiveSet&) = default;

private:
  Nat lower_bound_;
};

/// Inductivity predicate (-1 + F) ∩ F = F evaluated on a truncation to
/// {0, ..., n}. The top point n has no successor inside the truncation and is
/// exempt.
bool is_inductive_truncated(const std::vector<bool>& members);

/// An element of B_ω^F: a triple (i, j, [level)) or the zero class that the
/// ideal of ∅-triples collapses to.
class Element {
public:
  Element(Nat i, Nat j, Nat level);

  static Element zero() noexcept { return Element(); }

  bool is_zero() const noexcept { return zero_; }
  Nat i() const noexcept { return i_; }
  Nat j() const noexcept { return j_; }
  Nat level() const noexcept { return level_; }
  InductiveSet set() const { return InductiveSet(level_); }

  friend bool operator==(const Element&, const Element&) = default;
  /// Lexicographic on (i, j, level); zero sorts after every triple.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept;

private:
  Element() noexcept : zero_(true) {}

  Nat i_ = 0;
  Nat j_ = 0;
  Nat level_ = 0;
  bool zero_ = false;
};

std::string to_string(const Element& x);
std::ostream& operator<<(std::ostream& os, const Element& x);

} // namespace bicext
