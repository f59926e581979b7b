#include "bicext/element.hpp"

#include <ostream>
#include <stdexcept>

namespace bicext {

InductiveSet::InductiveSet(Nat lower_bound) : lower_bound_(lower_bound) {
  if (lower_bound < 0) {
    throw std::invalid_argument("inductive set lower bound must be non-negative");
  }
}

std::vector<bool> InductiveSet::truncate(Nat n) const {
  std::vector<bool> members(static_cast<std::size_t>(n + 1), false);
  for (Nat x = lower_bound_; x <= n; ++x) {
    members[static_cast<std::size_t>(x)] = true;
  }
  return members;
}

std::optional<InductiveSet> InductiveSet::from_truncation(const std::vector<bool>& members) {
  if (!is_inductive_truncated(members)) {
    return std::nullopt;
  }
  for (std::size_t x = 0; x < members.size(); ++x) {
    if (members[x]) {
      return InductiveSet(static_cast<Nat>(x));
    }
  }
  return std::nullopt;
}

bool is_inductive_truncated(const std::vector<bool>& members) {
  // x ∈ F must imply x ∈ -1 + F, i.e. x + 1 ∈ F.
  for (std::size_t x = 0; x + 1 < members.size(); ++x) {
    if (members[x] && !members[x + 1]) {
      return false;
    }
  }
  return true;
}

Element::Element(Nat i, Nat j, Nat level) : i_(i), j_(j), level_(level) {
  if (i < 0 || j < 0 || level < 0) {
    throw std::invalid_argument("element coordinates must be non-negative");
  }
}

std::strong_ordering operator<=>(const Element& a, const Element& b) noexcept {
  if (a.zero_ || b.zero_) {
    return a.zero_ <=> b.zero_;
  }
  if (auto c = a.i_ <=> b.i_; c != 0) return c;
  if (auto c = a.j_ <=> b.j_; c != 0) return c;
  return a.level_ <=> b.level_;
}

std::string to_string(const Element& x) {
  if (x.is_zero()) {
    return "zero";
  }
  return "(" + std::to_string(x.i()) + "," + std::to_string(x.j()) + "," +
         std::to_string(x.level()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

} // namespace bicext
