#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "bicext/element.hpp"

using namespace bicext;

TEST_CASE("inductive sets are final segments") {
  const InductiveSet s(2);
  CHECK_FALSE(s.contains(1));
  CHECK(s.contains(2));
  CHECK(s.contains(1000));
  CHECK(s.truncate(4) == std::vector<bool>{false, false, true, true, true});
  CHECK(InductiveSet::from_truncation(s.truncate(4)) == s);
  CHECK_THROWS_AS(InductiveSet(-1), std::invalid_argument);
}

TEST_CASE("truncated inductivity predicate") {
  CHECK(is_inductive_truncated({false, true, true}));
  CHECK(is_inductive_truncated({false, false, true}));
  CHECK(is_inductive_truncated({false, false, false}));
  CHECK_FALSE(is_inductive_truncated({true, false, true}));
  CHECK_FALSE(is_inductive_truncated({false, true, false, true}));
  CHECK_FALSE(InductiveSet::from_truncation({true, false, true}).has_value());
  CHECK_FALSE(InductiveSet::from_truncation({false, false}).has_value());
}

TEST_CASE("element construction and ordering") {
  CHECK_THROWS_AS(Element(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Element(0, 0, -2), std::invalid_argument);
  const Element x(1, 2, 0);
  CHECK(x.i() == 1);
  CHECK(x.j() == 2);
  CHECK(x.set() == InductiveSet(0));
  CHECK(Element(0, 5, 2) < Element(1, 0, 0));
  CHECK(Element(1, 0, 1) < Element(1, 0, 2));
  CHECK(Element(99, 99, 99) < Element::zero());
  CHECK(Element::zero() == Element::zero());
  CHECK(Element::zero().is_zero());
  CHECK(Element(0, 0, 0) != Element::zero());
}

TEST_CASE("element text form") {
  CHECK(to_string(Element(3, 4, 2)) == "(3,4,2)");
  CHECK(to_string(Element::zero()) == "zero");
  std::ostringstream os;
  os << Element(0, 1, 1);
  CHECK(os.str() == "(0,1,1)");
}
