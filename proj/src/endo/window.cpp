#include "bicext/window.hpp"

#include <algorithm>
#include <map>

#include "bicext/semigroup.hpp"

namespace bicext {

WindowCheck check_homomorphism_on_window(const EndoSpec& e, Nat window) {
  const std::vector<Element> elems = elements_up_to(domain_of(e), window);
  std::vector<Element> images;
  images.reserve(elems.size());
  for (const Element& x : elems) {
    images.push_back(apply_endo(e, x));
  }
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (apply_endo(e, product(elems[a], elems[b])) != product(images[a], images[b])) {
        return {false, window, PairWitness{elems[a], elems[b]}};
      }
    }
  }
  return {true, window, std::nullopt};
}

WindowCheck check_injective_on_window(const EndoSpec& e, Nat window) {
  const std::vector<Element> elems = elements_up_to(domain_of(e), window);
  // image -> smallest window element hitting it, in window order
  std::map<Element, std::size_t> first_preimage;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t b = 0; b < elems.size(); ++b) {
    auto [it, inserted] = first_preimage.try_emplace(apply_endo(e, elems[b]), b);
    if (inserted) continue;
    // The earliest x colliding with anything is the first preimage of some
    // image; among its partners the first one seen is the smallest y.
    if (!best || it->second < best->first) {
      best = {it->second, b};
    }
  }
  if (best) {
    return {false, window, PairWitness{elems[best->first], elems[best->second]}};
  }
  return {true, window, std::nullopt};
}

bool check_monoid(const EndoSpec& e) {
  const Element one = domain_of(e).identity();
  return apply_endo(e, one) == one;
}

std::vector<Element> fixed_points_in_window(const EndoSpec& e, Nat window) {
  std::vector<Element> out;
  for (const Element& x : elements_up_to(domain_of(e), window)) {
    if (apply_endo(e, x) == x) out.push_back(x);
  }
  return out;
}

bool agree_on_window(const EndoSpec& a, const EndoSpec& b, Nat window) {
  const OmegaClosedFamily fam = domain_of(a);
  if (fam != domain_of(b)) return false;
  const std::vector<Element> elems = elements_up_to(fam, window);
  return std::all_of(elems.begin(), elems.end(),
                     [&](const Element& x) { return apply_endo(a, x) == apply_endo(b, x); });
}

} // namespace bicext
