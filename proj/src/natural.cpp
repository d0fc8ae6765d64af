#include "jlog/natural.hpp"

#include "jlog/hilbert.hpp"

namespace jlog {

Formula neg(const Formula &f) { return Formula::implies(f, Formula::bottom()); }

std::size_t dne(DerivationBuilder &b, std::size_t line) {
  Formula f = b.formula(line).left().left();
  return b.mp(b.axiom("DNE", {f}), line);
}

std::size_t efq(DerivationBuilder &b, std::size_t bottom, const Formula &f) {
  // ⊥ → ((f → ⊥) → ⊥), then DNE.
  std::size_t k = b.axiom("K", {Formula::bottom(), neg(f)});
  return dne(b, b.mp(k, bottom));
}

std::size_t discharge(DerivationBuilder &b, const Derivation &d,
                      const Formula &a) {
  return b.import(deduction_transform(d, a));
}

std::size_t by_contradiction(DerivationBuilder &b, const Derivation &d,
                             const Formula &f) {
  return dne(b, discharge(b, d, neg(f)));
}

} // namespace jlog
