#include "bicext/family.hpp"

#include <algorithm>
#include <ostream>

#include "bicext/errors.hpp"

namespace bicext {

namespace {

std::string join_bounds(std::span<const Nat> bounds) {
  std::string out;
  for (std::size_t idx = 0; idx < bounds.size(); ++idx) {
    if (idx != 0) out += ",";
    out += std::to_string(bounds[idx]);
  }
  return out;
}

} // namespace

OmegaClosedFamily OmegaClosedFamily::validate(std::vector<Nat> lower_bounds, bool contains_empty) {
  if (lower_bounds.empty()) {
    throw InvalidFamily("a family needs at least one nonempty inductive set");
  }
  if (std::any_of(lower_bounds.begin(), lower_bounds.end(), [](Nat a) { return a < 0; })) {
    throw InvalidFamily("lower bounds must be non-negative");
  }
  std::sort(lower_bounds.begin(), lower_bounds.end());
  lower_bounds.erase(std::unique(lower_bounds.begin(), lower_bounds.end()), lower_bounds.end());
  if (auto witness = find_violation(lower_bounds)) {
    throw NotOmegaClosed(*witness);
  }
  return OmegaClosedFamily(std::move(lower_bounds), contains_empty);
}

std::optional<ClosureWitness> OmegaClosedFamily::find_violation(std::span<const Nat> sorted_bounds) {
  if (sorted_bounds.empty()) {
    return std::nullopt;
  }
  const Nat top = sorted_bounds.back();
  auto member = [&](Nat v) {
    return std::binary_search(sorted_bounds.begin(), sorted_bounds.end(), v);
  };
  for (Nat a : sorted_bounds) {
    for (Nat b : sorted_bounds) {
      for (Nat n = 0; n <= top; ++n) {
        if (!member(std::max(a, b - n))) {
          return ClosureWitness{a, b, n};
        }
      }
    }
  }
  return std::nullopt;
}

bool OmegaClosedFamily::contains_level(Nat level) const noexcept {
  return std::binary_search(bounds_.begin(), bounds_.end(), level);
}

bool OmegaClosedFamily::contains(const Element& x) const noexcept {
  return x.is_zero() ? contains_empty_ : contains_level(x.level());
}

bool OmegaClosedFamily::is_subfamily_of(const OmegaClosedFamily& other) const noexcept {
  if (contains_empty_ && !other.contains_empty_) {
    return false;
  }
  return std::includes(other.bounds_.begin(), other.bounds_.end(), bounds_.begin(), bounds_.end());
}

std::string to_string(const OmegaClosedFamily& fam) {
  std::string out = join_bounds(fam.lower_bounds());
  if (fam.contains_empty()) out += ",empty";
  return out;
}

std::ostream& operator<<(std::ostream& os, const OmegaClosedFamily& fam) {
  return os << to_string(fam);
}

NormalizedFamily normalize_family(const OmegaClosedFamily& fam) {
  const Nat shift = fam.min_bound();
  std::vector<Nat> shifted;
  shifted.reserve(fam.size());
  for (Nat a : fam.lower_bounds()) {
    shifted.push_back(a - shift);
  }
  return {OmegaClosedFamily::validate(std::move(shifted), fam.contains_empty()), shift};
}

Element shift_level(const Element& x, Nat shift) {
  if (x.is_zero()) return x;
  return Element(x.i(), x.j(), x.level() - shift);
}

std::vector<Element> elements_up_to(const OmegaClosedFamily& fam, Nat n) {
  std::vector<Element> out;
  if (n < 0) return out;
  const auto side = static_cast<std::size_t>(n + 1);
  out.reserve(side * side * fam.size() + (fam.contains_empty() ? 1 : 0));
  for (Nat i = 0; i <= n; ++i) {
    for (Nat j = 0; j <= n; ++j) {
      for (Nat a : fam.lower_bounds()) {
        out.emplace_back(i, j, a);
      }
    }
  }
  if (fam.contains_empty()) {
    out.push_back(Element::zero());
  }
  return out;
}

namespace families {

OmegaClosedFamily single(Nat s) { return OmegaClosedFamily::validate({s}); }
OmegaClosedFamily f2() { return OmegaClosedFamily::validate({0, 1}); }
OmegaClosedFamily f3() { return OmegaClosedFamily::validate({0, 1, 2}); }
OmegaClosedFamily f12() { return OmegaClosedFamily::validate({1, 2}); }

} // namespace families

} // namespace bicext
