#include "bicext/errors.hpp"

namespace bicext {

namespace {

std::string closure_message(const ClosureWitness& w) {
  const Nat missing = std::max(w.a, w.b - w.n);
  return "family is not omega-closed: [" + std::to_string(w.a) + ") ∩ (-" + std::to_string(w.n) +
         " + [" + std::to_string(w.b) + ")) = [" + std::to_string(missing) +
         ") is missing (lower bounds of an omega-closed family of inductive sets must form a "
         "contiguous interval)";
}

} // namespace

NotOmegaClosed::NotOmegaClosed(ClosureWitness witness)
    : InvalidFamily(closure_message(witness)), witness_(witness) {}

ElementOutsideDomain::ElementOutsideDomain(const Element& x, const OmegaClosedFamily& fam)
    : AlgebraError("element " + to_string(x) + " is not in the family {" + to_string(fam) + "}"),
      element_(x) {}

InvalidSymbol::InvalidSymbol(char symbol, std::size_t position)
    : AlgebraError(std::string("invalid symbol '") + symbol + "' at position " +
                   std::to_string(position) + " (expected 'p' or 'q')"),
      symbol_(symbol), position_(position) {}

NotClosedUnderRestriction::NotClosedUnderRestriction(const Element& generator, const Element& image)
    : AlgebraError("image " + to_string(image) + " of generator " + to_string(generator) +
                   " leaves the submonoid"),
      witness_(generator), image_(image) {}

} // namespace bicext
