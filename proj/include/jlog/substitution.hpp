#pragma once

#include "jlog/formula.hpp"

#include <map>
#include <unordered_map>
#include <string>

namespace jlog {

/// σ: simultaneous replacement of atoms by formulas and of proof or
/// justification variables (ordinary or provisional) by terms of the same
/// sort. The language has no binders, so application is plain replacement.
struct Substitution {
  std::map<std::string, Formula> atoms;
  std::map<Term, Term> vars;

  bool empty() const { return atoms.empty() && vars.empty(); }
};

/// Applies one substitution to many formulas, sharing work between them.
class SubstitutionApplier {
public:
  explicit SubstitutionApplier(const Substitution &s) : s_(s) {}
  Term term(const Term &t);
  Formula formula(const Formula &f);

private:
  const Substitution &s_;
  std::unordered_map<Term, Term, TermHash> terms_;
  std::unordered_map<Formula, Formula, FormulaHash> formulas_;
};

Term apply(const Term &t, const Substitution &s);
Formula apply(const Formula &f, const Substitution &s);

/// Applies σ and validates the result against the dialect.
Formula apply_substitution(const Formula &f, const Substitution &s,
                           Dialect dialect);

/// The substitution that applies `first` and then `second`.
Substitution compose(const Substitution &second, const Substitution &first);

} // namespace jlog
