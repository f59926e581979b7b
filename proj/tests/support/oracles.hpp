#pragma once

// Independent reference implementations used to cross-check the library.
// They deliberately avoid the closed-form lower-bound arithmetic.

#include <bitset>
#include <random>
#include <string>

#include "bicext/element.hpp"
#include "bicext/semigroup.hpp"

namespace bicext::test {

/// Sets are truncated to {0, ..., 127}; every test keeps coordinates small
/// enough that shifts never push a lower bound out of range.
using Bits = std::bitset<128>;

inline Bits final_segment(Nat a) {
  Bits b;
  for (std::size_t x = static_cast<std::size_t>(a); x < b.size(); ++x) b.set(x);
  return b;
}

/// -n + F = {x : x + n in F}
inline Bits shift_down(const Bits& f, Nat n) { return f >> static_cast<std::size_t>(n); }

inline Nat lowest(const Bits& f) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f.test(x)) return static_cast<Nat>(x);
  }
  return -1;
}

/// The two-case defining formula on explicit sets, including the j1 = i2
/// overlap where both branches must agree.
inline Element product_by_sets(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) return Element::zero();
  const Bits f1 = final_segment(x.level());
  const Bits f2 = final_segment(y.level());
  Nat i = 0;
  Nat j = 0;
  Bits f;
  if (x.j() <= y.i()) {
    i = x.i() - x.j() + y.i();
    j = y.j();
    f = shift_down(f1, y.i() - x.j()) & f2;
  } else {
    i = x.i();
    j = x.j() - y.i() + y.j();
    f = f1 & shift_down(f2, x.j() - y.i());
  }
  if (f.none()) return Element::zero();
  return Element(i, j, lowest(f));
}

/// Erases "pq" until none is left, then counts the remaining q^k p^l.
inline BicyclicElement rewrite_pq(std::string word) {
  for (auto pos = word.find("pq"); pos != std::string::npos; pos = word.find("pq")) {
    word.erase(pos, 2);
  }
  BicyclicElement out;
  for (char c : word) (c == 'q' ? out.k : out.l) += 1;
  return out;
}

inline std::string random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::bernoulli_distribution coin(0.5);
  std::string w(len(rng), 'p');
  for (char& c : w) c = coin(rng) ? 'p' : 'q';
  return w;
}

} // namespace bicext::test
