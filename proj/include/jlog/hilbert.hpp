#pragma once

#include "jlog/derivation.hpp"
#include "jlog/substitution.hpp"

namespace jlog {

struct DeductionOptions {
  /// Lines that do not depend on the discharged formula are lifted with a
  /// single K step instead of being traversed. Off by default.
  bool skip_independent = false;
};

/// Δ, A ⊢ B  to  Δ ⊢ A → B. Throws NotDerivable when d does not check.
Derivation deduction_transform(const Derivation &d, const Formula &discharge,
                               DeductionOptions options = {});

struct Internalized {
  Term term;
  Derivation derivation;
};

/// ⊢ A  to  ⊢ λ:A. Throws HasHypotheses or NotAppropriate.
Internalized internalize(const Derivation &d);

/// Δσ ⊢ Aσ. Throws DialectError when σ leaves the dialect.
Derivation substitute_derivation(const Derivation &d, const Substitution &s);

} // namespace jlog
