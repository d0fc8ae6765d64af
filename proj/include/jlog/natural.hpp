#pragma once

// Classical glue on top of the Hilbert builder, used to turn sequent rules
// into derivation steps.

#include "jlog/derivation.hpp"

namespace jlog {

/// F → ⊥.
Formula neg(const Formula &f);

/// From a line of (F → ⊥) → ⊥, a line of F.
std::size_t dne(DerivationBuilder &b, std::size_t line);

/// From a line of ⊥, a line of f.
std::size_t efq(DerivationBuilder &b, std::size_t bottom, const Formula &f);

/// Discharges `a` from d and imports the result: returns the line of
/// a → (conclusion of d).
std::size_t discharge(DerivationBuilder &b, const Derivation &d,
                      const Formula &a);

/// d concludes ⊥ from hypothesis (f → ⊥); returns the line of f.
std::size_t by_contradiction(DerivationBuilder &b, const Derivation &d,
                             const Formula &f);

} // namespace jlog
