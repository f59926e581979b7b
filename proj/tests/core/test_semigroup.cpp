#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "bicext/errors.hpp"
#include "bicext/family.hpp"
#include "bicext/semigroup.hpp"

using namespace bicext;

TEST_CASE("multiplication examples") {
  const auto f3 = families::f3();
  CHECK(multiply(Element(1, 1, 0), Element(0, 0, 2), f3) == Element(1, 1, 1));
  CHECK(multiply(Element(0, 0, 0), Element(4, 7, 2), f3) == Element(4, 7, 2));
  CHECK(multiply(Element(2, 2, 0), Element(5, 5, 0), f3) == Element(5, 5, 0));
  CHECK(multiply(Element(1, 1, 1), Element(2, 2, 0), f3) == Element(2, 2, 0));
  CHECK(multiply(Element(1, 0, 0), Element(1, 0, 0), f3) == Element(2, 0, 0));
}

TEST_CASE("multiplication agrees with the set-level definition") {
  const auto fam = OmegaClosedFamily::validate({0, 1, 2, 3, 4});
  const auto xs = elements_up_to(fam, 5);
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      REQUIRE(product(x, y) == test::product_by_sets(x, y));
    }
  }
}

TEST_CASE("multiply checks the domain") {
  const auto f2 = families::f2();
  CHECK_THROWS_AS(multiply(Element(0, 0, 2), Element(0, 0, 0), f2), ElementOutsideDomain);
  CHECK_THROWS_AS(multiply(Element::zero(), Element(0, 0, 0), f2), ElementOutsideDomain);
  const auto with_zero = OmegaClosedFamily::validate({0, 1}, true);
  CHECK(multiply(Element::zero(), Element(3, 1, 1), with_zero) == Element::zero());
  CHECK(multiply(Element(3, 1, 1), Element::zero(), with_zero) == Element::zero());
}

TEST_CASE("semigroup laws on a small window") {
  const auto f3 = families::f3();
  const auto xs = elements_up_to(f3, 3);
  for (const auto& x : xs) {
    CHECK(product(f3.identity(), x) == x);
    CHECK(product(x, f3.identity()) == x);
    const Element xi = invert(x);
    CHECK(product(product(x, xi), x) == x);
    CHECK(product(product(xi, x), xi) == xi);
    for (const auto& y : xs) {
      if (is_idempotent(x) && is_idempotent(y)) CHECK(product(x, y) == product(y, x));
      // Without ∅ in the family no product collapses to zero.
      CHECK_FALSE(product(x, y).is_zero());
      for (const auto& z : xs) REQUIRE(product(product(x, y), z) == product(x, product(y, z)));
    }
  }
}

TEST_CASE("inverse and idempotents") {
  CHECK(invert(Element(0, 1, 1)) == Element(1, 0, 1));
  CHECK(invert(Element(5, 5, 2)) == Element(5, 5, 2));
  CHECK(invert(Element(3, 1, 0)) == Element(1, 3, 0));
  CHECK(invert(Element::zero()) == Element::zero());
  CHECK(is_idempotent(Element(4, 4, 1)));
  CHECK_FALSE(is_idempotent(Element(1, 0, 0)));
  CHECK(is_idempotent(Element::zero()));
  for (const auto& x : elements_up_to(families::f3(), 4)) {
    CHECK(is_idempotent(x) == (product(x, x) == x));
  }
}

TEST_CASE("natural partial order") {
  const auto f3 = families::f3();
  CHECK(natural_leq(Element(1, 1, 1), Element(0, 0, 2), f3));
  CHECK(natural_leq(Element(0, 0, 2), Element(0, 0, 1), f3));
  CHECK(natural_leq(Element(0, 0, 1), Element(0, 0, 0), f3));
  CHECK_FALSE(natural_leq(Element(0, 0, 1), Element(0, 0, 2), f3));
  const auto xs = elements_up_to(f3, 3);
  for (const auto& x : xs) {
    CHECK(natural_leq(x, x, f3));
    for (const auto& y : xs) {
      // Definition: x = y e for some idempotent e, searched over the window.
      bool witnessed = false;
      for (const auto& e : elements_up_to(f3, 7)) {
        witnessed = witnessed || (is_idempotent(e) && product(y, e) == x);
      }
      CHECK(natural_leq(x, y, f3) == witnessed);
    }
  }
}

TEST_CASE("bicyclic multiplication") {
  CHECK(multiply_bicyclic({1, 0}, {0, 1}) == BicyclicElement{1, 1});
  CHECK(multiply_bicyclic({0, 1}, {1, 0}) == BicyclicElement{0, 0});
  CHECK(multiply_bicyclic({2, 3}, {1, 4}) == BicyclicElement{2, 6});
}

TEST_CASE("word normal form") {
  CHECK(normalize_bicyclic_word("pq") == BicyclicElement{0, 0});
  CHECK(normalize_bicyclic_word("") == BicyclicElement{0, 0});
  CHECK(normalize_bicyclic_word("qqpp") == BicyclicElement{2, 2});
  try {
    normalize_bicyclic_word("pqx");
    FAIL("expected InvalidSymbol");
  } catch (const InvalidSymbol& e) {
    CHECK(e.symbol() == 'x');
    CHECK(e.position() == 2);
  }
  std::mt19937 rng(7);
  for (int n = 0; n < 500; ++n) {
    const std::string w = test::random_word(rng, 24);
    CHECK(normalize_bicyclic_word(w) == test::rewrite_pq(w));
  }
}
