#include "bicext/endomorphism.hpp"

#include <stdexcept>
#include <tuple>

#include "bicext/errors.hpp"
#include "bicext/semigroup.hpp"

namespace bicext {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Nat mul_add(Nat k, Nat x, Nat offset) {
  Nat scaled = 0;
  Nat out = 0;
  if (__builtin_mul_overflow(k, x, &scaled) || __builtin_add_overflow(scaled, offset, &out)) {
    throw std::overflow_error("endomorphism image does not fit in 64 bits");
  }
  return out;
}

Element scaled(Nat k, const Element& x, Nat offset, Nat level) {
  return Element(mul_add(k, x.i(), offset), mul_add(k, x.j(), offset), level);
}

Element power(const Element& g, Nat n) {
  Element acc = g;
  for (Nat step = 1; step < n; ++step) {
    acc = product(acc, g);
  }
  return acc;
}

Element apply_table(const GeneratorTable& t, const Element& x) {
  // (i, j, [a)) = plus^i · e_a · minus^j, evaluated left to right.
  Element out = t.idempotent_image(x.level());
  if (x.i() > 0) out = product(power(t.plus_image(), x.i()), out);
  if (x.j() > 0) out = product(out, power(t.minus_image(), x.j()));
  return out;
}

GeneratorTable tabulate(const OmegaClosedFamily& fam, const auto& image_of) {
  const Generators gens = generators_of(fam);
  std::map<Nat, Element> idempotents;
  for (const Element& e : gens.idempotents) {
    idempotents.emplace(e.level(), image_of(e));
  }
  return GeneratorTable(fam, image_of(gens.plus), image_of(gens.minus), std::move(idempotents));
}

} // namespace

AlphaKP::AlphaKP(Nat k, Nat p) : k_(k), p_(p) {
  if (k < 1 || p < 0 || p > k - 1) {
    throw InvalidParameters("alpha_{k,p} needs k >= 1 and 0 <= p <= k-1, got k=" +
                            std::to_string(k) + ", p=" + std::to_string(p));
  }
}

BetaKP::BetaKP(Nat k, Nat p) : k_(k), p_(p) {
  if (k < 2 || p < 1 || p > k - 1) {
    throw InvalidParameters("beta_{k,p} needs k >= 2 and 1 <= p <= k-1, got k=" +
                            std::to_string(k) + ", p=" + std::to_string(p));
  }
}

AlphaBracket::AlphaBracket(Nat k) : k_(k) {
  if (k < 1) throw InvalidParameters("alpha_[k] needs k >= 1, got k=" + std::to_string(k));
}

Scale::Scale(Nat k) : k_(k) {
  if (k < 1) throw InvalidParameters("scale needs k >= 1, got k=" + std::to_string(k));
}

Generators generators_of(const OmegaClosedFamily& fam) {
  const Nat m = fam.min_bound();
  Generators gens{Element(1, 0, m), Element(0, 1, m), {}};
  for (Nat a : fam.lower_bounds()) {
    gens.idempotents.emplace_back(0, 0, a);
  }
  return gens;
}

GeneratorTable::GeneratorTable(OmegaClosedFamily family, Element plus_image, Element minus_image,
                               std::map<Nat, Element> idempotent_images)
    : family_(std::move(family)), plus_(plus_image), minus_(minus_image),
      idempotents_(std::move(idempotent_images)) {
  if (idempotents_.size() != family_.size()) {
    throw InvalidParameters("generator table needs exactly one idempotent image per level");
  }
  for (const auto& [level, image] : idempotents_) {
    if (!family_.contains_level(level)) {
      throw InvalidParameters("generator table has an image for level " + std::to_string(level) +
                              " outside the family");
    }
    if (!family_.contains(image)) throw ElementOutsideDomain(image, family_);
  }
  if (!family_.contains(plus_)) throw ElementOutsideDomain(plus_, family_);
  if (!family_.contains(minus_)) throw ElementOutsideDomain(minus_, family_);
}

bool operator<(const GeneratorTable& a, const GeneratorTable& b) {
  auto key = [](const GeneratorTable& t) {
    return std::tie(t.family_.lower_bounds(), t.plus_, t.minus_, t.idempotents_);
  };
  return key(a) < key(b);
}

OmegaClosedFamily domain_of(const EndoSpec& e) {
  return std::visit(overloaded{
                        [](const AlphaKP&) { return families::f2(); },
                        [](const BetaKP&) { return families::f2(); },
                        [](const AlphaBracket&) { return families::f3(); },
                        [](const Scale&) { return families::single(0); },
                        [](const GeneratorTable& t) { return t.family(); },
                    },
                    e);
}

Element apply_endo(const EndoSpec& e, const Element& x) {
  if (const auto fam = domain_of(e); !fam.contains(x)) {
    throw ElementOutsideDomain(x, fam);
  }
  if (x.is_zero()) return x;
  return std::visit(overloaded{
                        [&](const AlphaKP& a) {
                          return x.level() == 0 ? scaled(a.k(), x, 0, 0) : scaled(a.k(), x, a.p(), 1);
                        },
                        [&](const BetaKP& b) {
                          return x.level() == 0 ? scaled(b.k(), x, 0, 0) : scaled(b.k(), x, b.p(), 0);
                        },
                        [&](const AlphaBracket& a) {
                          if (x.level() < 2) return scaled(a.k(), x, 0, x.level());
                          // k(i + 1) - 1 = ki + (k - 1)
                          return scaled(a.k(), x, a.k() - 1, 2);
                        },
                        [&](const Scale& s) { return scaled(s.k(), x, 0, 0); },
                        [&](const GeneratorTable& t) { return apply_table(t, x); },
                    },
                    e);
}

GeneratorTable as_table(const EndoSpec& e) {
  if (const auto* t = std::get_if<GeneratorTable>(&e)) return *t;
  return tabulate(domain_of(e), [&](const Element& g) { return apply_endo(e, g); });
}

GeneratorTable identity_table(const OmegaClosedFamily& fam) {
  return tabulate(fam, [](const Element& g) { return g; });
}

bool is_named_identity(const EndoSpec& e) {
  return std::visit(overloaded{
                        [](const AlphaKP& a) { return a.k() == 1; },
                        [](const BetaKP&) { return false; },
                        [](const AlphaBracket& a) { return a.k() == 1; },
                        [](const Scale& s) { return s.k() == 1; },
                        [](const GeneratorTable&) { return false; },
                    },
                    e);
}

EndoSpec compose_endo(const EndoSpec& e1, const EndoSpec& e2) {
  const OmegaClosedFamily fam = domain_of(e1);
  if (fam != domain_of(e2)) {
    throw FamilyMismatch("cannot compose endomorphisms of {" + to_string(fam) + "} and {" +
                         to_string(domain_of(e2)) + "}");
  }
  if (is_named_identity(e1)) return e2;
  if (is_named_identity(e2)) return e1;

  std::optional<EndoSpec> closed = std::visit(
      overloaded{
          [](const AlphaBracket& a, const AlphaBracket& b) -> std::optional<EndoSpec> {
            return AlphaBracket(a.k() * b.k());
          },
          [](const Scale& a, const Scale& b) -> std::optional<EndoSpec> { return Scale(a.k() * b.k()); },
          [](const AlphaKP& a, const AlphaKP& b) -> std::optional<EndoSpec> {
            return AlphaKP(a.k() * b.k(), b.p() + b.k() * a.p());
          },
          [](const AlphaKP& a, const BetaKP& b) -> std::optional<EndoSpec> {
            return BetaKP(a.k() * b.k(), b.p() + b.k() * a.p());
          },
          [](const BetaKP& a, const AlphaKP& b) -> std::optional<EndoSpec> {
            return BetaKP(a.k() * b.k(), b.k() * a.p());
          },
          [](const BetaKP& a, const BetaKP& b) -> std::optional<EndoSpec> {
            return BetaKP(a.k() * b.k(), b.k() * a.p());
          },
          [](const auto&, const auto&) -> std::optional<EndoSpec> { return std::nullopt; },
      },
      e1, e2);
  if (closed) return *closed;

  return tabulate(fam, [&](const Element& g) { return apply_endo(e2, apply_endo(e1, g)); });
}

GeneratorTable restrict_to(const EndoSpec& e, const OmegaClosedFamily& sub) {
  const OmegaClosedFamily fam = domain_of(e);
  if (!sub.is_subfamily_of(fam)) {
    throw FamilyMismatch("{" + to_string(sub) + "} is not a subfamily of {" + to_string(fam) + "}");
  }
  const Generators gens = generators_of(sub);
  std::vector<Element> ordered = gens.idempotents;
  ordered.push_back(gens.minus);
  ordered.push_back(gens.plus);
  for (const Element& g : ordered) {
    if (const Element image = apply_endo(e, g); !sub.contains(image)) {
      throw NotClosedUnderRestriction(g, image);
    }
  }
  return tabulate(sub, [&](const Element& g) { return apply_endo(e, g); });
}

std::string to_string(const EndoSpec& e) {
  return std::visit(overloaded{
                        [](const AlphaKP& a) {
                          return "alpha:" + std::to_string(a.k()) + "," + std::to_string(a.p());
                        },
                        [](const BetaKP& b) {
                          return "beta:" + std::to_string(b.k()) + "," + std::to_string(b.p());
                        },
                        [](const AlphaBracket& a) { return "alpha_bracket:" + std::to_string(a.k()); },
                        [](const Scale& s) { return "scale:" + std::to_string(s.k()); },
                        [](const GeneratorTable& t) {
                          std::string out = "table(family=" + to_string(t.family()) +
                                            ";plus=" + to_string(t.plus_image()) +
                                            ";minus=" + to_string(t.minus_image());
                          for (const auto& [level, image] : t.idempotent_images()) {
                            out += ";e" + std::to_string(level) + "=" + to_string(image);
                          }
                          return out + ")";
                        },
                    },
                    e);
}

} // namespace bicext
