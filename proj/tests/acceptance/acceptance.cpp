// One line per acceptance criterion; exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bicext/classifier.hpp"
#include "bicext/errors.hpp"
#include "bicext/semigroup.hpp"
#include "bicext/window.hpp"

using namespace bicext;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

Outcome semigroup_laws() {
  Outcome o;
  const auto start = Clock::now();
  const auto f3 = families::f3();
  const auto xs = elements_up_to(f3, 6);
  o.require(xs.size() == 147, "window size is not 147");
  std::uint64_t triples = 0;
  for (const auto& x : xs) {
    o.require(product(f3.identity(), x) == x && product(x, f3.identity()) == x, "identity law fails at " + to_string(x));
    const Element xi = invert(x);
    o.require(product(product(x, xi), x) == x && product(product(xi, x), xi) == xi,
              "inverse law fails at " + to_string(x));
    for (const auto& y : xs) {
      if (is_idempotent(x) && is_idempotent(y)) {
        o.require(product(x, y) == product(y, x), "idempotents do not commute: " + to_string(x) + ", " + to_string(y));
      }
      const Element xy = product(x, y);
      for (const auto& z : xs) {
        ++triples;
        if (product(xy, z) != product(x, product(y, z))) {
          o.require(false, "associativity fails at " + to_string(x) + to_string(y) + to_string(z));
        }
      }
    }
  }
  const double t = seconds_since(start);
  o.require(t < 30.0, "took " + fmt_seconds(t));
  if (o.passed) o.detail = std::to_string(triples) + " triples associative, laws hold, " + fmt_seconds(t);
  return o;
}

Outcome alpha_bracket_replay() {
  Outcome o;
  for (Nat k = 1; k <= 8; ++k) {
    const AlphaBracket e(k);
    o.require(check_monoid(e), "alpha_bracket:" + std::to_string(k) + " not monoid");
    o.require(check_homomorphism_on_window(e, 15).holds, "alpha_bracket:" + std::to_string(k) + " not hom");
    o.require(check_injective_on_window(e, 15).holds, "alpha_bracket:" + std::to_string(k) + " not injective");
  }
  if (o.passed) o.detail = "alpha_[1..8] monoid, homomorphic and injective on window 15";
  return o;
}

Outcome fixed_points() {
  Outcome o;
  const std::vector<Element> expected{Element(0, 0, 0), Element(0, 0, 1)};
  for (Nat k = 2; k <= 8; ++k) {
    const auto fixed = fixed_points_in_window(AlphaBracket(k), 20);
    o.require(fixed == expected, "alpha_bracket:" + std::to_string(k) + " has other fixed points");
    o.require(std::all_of(fixed.begin(), fixed.end(), is_idempotent), "non-idempotent fixed point");
  }
  o.require(fixed_points_in_window(AlphaBracket(1), 20) == elements_up_to(families::f3(), 20),
            "alpha_bracket:1 does not fix the window");
  if (o.passed) o.detail = "k = 2..8 fix exactly (0,0,0), (0,0,1) on window 20; k = 1 fixes all 1323";
  return o;
}

Outcome from_oracle(const OracleResult& r) { return {r.passed, r.summary}; }

Outcome f3_classification() {
  const auto start = Clock::now();
  Outcome o = from_oracle(verify_classification_f3({4, 6}));
  const double t = seconds_since(start);
  o.require(t < 300.0, "took " + fmt_seconds(t));
  if (o.passed) o.detail += ", " + fmt_seconds(t);
  return o;
}

Outcome f2_classification() {
  const auto r = verify_classification(families::f2(), {4, 6});
  Outcome o{r.passed, r.summary};
  if (r.report) {
    for (const auto& c : r.report->candidates) {
      o.require(c.matched && (std::holds_alternative<AlphaKP>(*c.matched) || std::holds_alternative<BetaKP>(*c.matched)),
                "candidate " + to_string(EndoSpec(c.table)) + " is not alpha_{k,p} or beta_{k,p}");
    }
  } else {
    o.require(false, "no report");
  }
  return o;
}

Outcome non_extension() {
  Outcome o = from_oracle(verify_non_extension({4, 6}));
  const auto report = enumerate_monoid_endos(families::f3(), {4, 6});
  for (const auto& c : report.candidates) {
    const GeneratorTable r = restrict_to(c.table, families::f2());
    const auto m = match_named(r, 6);
    const bool ok = m && std::holds_alternative<AlphaKP>(*m) && std::get<AlphaKP>(*m).p() == 0;
    o.require(ok, "restriction of " + to_string(EndoSpec(c.table)) + " is not alpha_{k,0}");
  }
  return o;
}

Outcome bicyclic_embedding() {
  Outcome o;
  const BicyclicElement p{0, 1};
  const BicyclicElement q{1, 0};
  auto word_of = [](const BicyclicElement& x) { return std::string(x.k, 'q') + std::string(x.l, 'p'); };
  for (Nat s = 0; s <= 2; ++s) {
    const auto fam = families::f3();
    std::set<Element> images;
    for (Nat k = 0; k <= 10; ++k) {
      for (Nat l = 0; l <= 10; ++l) {
        images.insert(Element(k, l, s));
        for (Nat m = 0; m <= 10; ++m) {
          for (Nat n = 0; n <= 10; ++n) {
            const BicyclicElement x{k, l};
            const BicyclicElement y{m, n};
            const BicyclicElement xy = multiply_bicyclic(x, y);
            o.require(xy == normalize_bicyclic_word(word_of(x) + word_of(y)), "bicyclic product disagrees with words");
            o.require(multiply(Element(k, l, s), Element(m, n, s), fam) == Element(xy.k, xy.l, s),
                      "embedding at level " + std::to_string(s) + " is not multiplicative");
          }
        }
      }
    }
    o.require(images.size() == 121, "embedding is not injective");
  }
  std::mt19937 rng(1000);
  std::uniform_int_distribution<std::size_t> len(0, 20);
  std::bernoulli_distribution coin(0.5);
  for (int n = 0; n < 1000; ++n) {
    std::string w(len(rng), 'p');
    BicyclicElement acc{0, 0};
    for (char& c : w) {
      c = coin(rng) ? 'p' : 'q';
      acc = multiply_bicyclic(acc, c == 'p' ? p : q);
    }
    o.require(normalize_bicyclic_word(w) == acc, "word " + w + " normalizes wrongly");
  }
  if (o.passed) o.detail = "levels 0, 1, 2 embed on window 10; 1000 random words agree";
  return o;
}

Outcome family_validator() {
  Outcome o;
  for (const auto& b : std::vector<std::vector<Nat>>{{0, 1, 2}, {0}, {0, 1}}) {
    try {
      OmegaClosedFamily::validate(b);
    } catch (const AlgebraError& e) {
      o.require(false, std::string("rejected a valid family: ") + e.what());
    }
  }
  try {
    OmegaClosedFamily::validate({0, 2});
    o.require(false, "accepted {0,2}");
  } catch (const NotOmegaClosed& e) {
    o.require(e.witness() == ClosureWitness{0, 2, 1}, "wrong witness for {0,2}");
  }
  const auto n = normalize_family(families::f12());
  o.require(n.family == families::f2() && n.shift == 1, "normalize({1,2}) is wrong");
  const auto xs = elements_up_to(families::f12(), 6);
  std::set<Element> images;
  for (const auto& x : xs) {
    images.insert(shift_level(x, n.shift));
    for (const auto& y : xs) {
      o.require(shift_level(multiply(x, y, families::f12()), n.shift) ==
                    multiply(shift_level(x, n.shift), shift_level(y, n.shift), n.family),
                "shift map is not a homomorphism");
    }
  }
  const auto target = elements_up_to(n.family, 6);
  o.require(images == std::set<Element>(target.begin(), target.end()), "shift map is not a bijection");
  if (o.passed) o.detail = "{0,1,2}, {0}, {0,1} accepted; {0,2} witness (0,2,1); {1,2} -> {0,1} shift 1 bijective on window 6";
  return o;
}

Outcome natural_order() {
  Outcome o;
  const auto f3 = families::f3();
  const auto xs = elements_up_to(f3, 5);
  const std::size_t n = xs.size();
  std::vector<char> leq(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = natural_leq(xs[a], xs[b], f3);
  }
  for (std::size_t a = 0; a < n; ++a) {
    o.require(leq[a * n + a], "not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a * n + b] && leq[b * n + a]) o.require(false, "not antisymmetric");
      if (!leq[a * n + b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[b * n + c] && !leq[a * n + c]) o.require(false, "not transitive");
      }
    }
  }
  o.require(natural_leq(Element(1, 1, 1), Element(0, 0, 2), f3) && natural_leq(Element(0, 0, 2), Element(0, 0, 1), f3) &&
                natural_leq(Element(0, 0, 1), Element(0, 0, 0), f3),
            "chain (1,1,1) <= (0,0,2) <= (0,0,1) <= (0,0,0) fails");
  for (Nat k = 1; k <= 8; ++k) {
    const AlphaBracket e(k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[a * n + b] && !natural_leq(apply_endo(e, xs[a]), apply_endo(e, xs[b]), f3)) {
          o.require(false, "alpha_bracket:" + std::to_string(k) + " is not monotone");
        }
      }
    }
  }
  if (o.passed) o.detail = "partial order on 108 elements, chain holds, alpha_[1..8] monotone";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"semigroup laws on F3 window 6", semigroup_laws},
      {"alpha_[k] replay, k = 1..8, window 15", alpha_bracket_replay},
      {"fixed points of alpha_[k], window 20", fixed_points},
      {"composition monoid, max k 10", [] { return from_oracle(verify_composition_monoid(10)); }},
      {"F3 classification, image bound 4, window 6", f3_classification},
      {"F2 classification, image bound 4, window 6", f2_classification},
      {"non-extension, image bound 4, window 6", non_extension},
      {"bicyclic embedding and word normal form", bicyclic_embedding},
      {"family validator and normalization", family_validator},
      {"natural partial order", natural_order},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
