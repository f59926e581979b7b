#pragma once

#include <optional>
#include <vector>

#include "bicext/endomorphism.hpp"

namespace bicext {

// Window checks certify a law only on elements_up_to(domain, window). Every
// result carries the window it was computed on, and failure witnesses are
// the lexicographically first violation in window order.

struct PairWitness {
  Element x;
  Element y;

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct WindowCheck {
  bool holds = false;
  Nat window = 0;
  std::optional<PairWitness> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// (xy)e = (xe)(ye) for all x, y in the window. Products may leave the
/// window; their images are still computed exactly.
WindowCheck check_homomorphism_on_window(const EndoSpec& e, Nat window);

/// No two window elements share an image. The witness is the pair (x, y),
/// x < y, with the smallest x and then the smallest y.
WindowCheck check_injective_on_window(const EndoSpec& e, Nat window);

/// The domain identity is fixed.
bool check_monoid(const EndoSpec& e);

std::vector<Element> fixed_points_in_window(const EndoSpec& e, Nat window);

/// Same domain and equal images on every window element.
bool agree_on_window(const EndoSpec& a, const EndoSpec& b, Nat window);

} // namespace bicext
