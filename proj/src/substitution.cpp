#include "jlog/substitution.hpp"

#include <unordered_map>

namespace jlog {

Term SubstitutionApplier::term(const Term &t) {
  if (!t.has_vars() || s_.vars.empty())
    return t;
  if (auto it = s_.vars.find(t); it != s_.vars.end())
    return it->second;
  if (auto it = terms_.find(t); it != terms_.end())
    return it->second;
  using K = Term::Kind;
  Term out;
  switch (t.kind()) {
  case K::App:
    out = Term::app(term(t.left()), term(t.right()));
    break;
  case K::Sum:
    out = Term::sum(term(t.left()), term(t.right()));
    break;
  case K::Bang:
    out = Term::bang(term(t.inner()));
    break;
  case K::E:
    out = Term::e(term(t.inner()));
    break;
  case K::JustSum:
    out = Term::just_sum(term(t.left()), term(t.right()));
    break;
  case K::M:
    out = Term::m(term(t.left()), term(t.right()));
    break;
  default:
    out = t;
    break;
  }
  terms_.emplace(t, out);
  return out;
}

Formula SubstitutionApplier::formula(const Formula &f) {
  if (s_.atoms.empty() && !f.has_justification())
    return f;
  if (auto it = formulas_.find(f); it != formulas_.end())
    return it->second;
  using K = Formula::Kind;
  Formula out;
  switch (f.kind()) {
  case K::Atom: {
    auto it = s_.atoms.find(f.name());
    out = it == s_.atoms.end() ? f : it->second;
    break;
  }
  case K::Bottom:
  case K::Meta:
    out = f;
    break;
  case K::Implies:
    out = Formula::implies(formula(f.left()), formula(f.right()));
    break;
  case K::And:
    out = Formula::conj(formula(f.left()), formula(f.right()));
    break;
  case K::Or:
    out = Formula::disj(formula(f.left()), formula(f.right()));
    break;
  case K::Not:
    out = Formula::neg(formula(f.body()));
    break;
  case K::Box:
    out = Formula::box(formula(f.body()));
    break;
  case K::ProofOf:
    out = Formula::proof_of(term(f.term()), formula(f.body()));
    break;
  case K::JustOf:
    out = Formula::just_of(term(f.term()), formula(f.body()));
    break;
  }
  formulas_.emplace(f, out);
  return out;
}

Term apply(const Term &t, const Substitution &s) {
  if (s.vars.empty())
    return t;
  return SubstitutionApplier(s).term(t);
}

Formula apply(const Formula &f, const Substitution &s) {
  if (s.empty())
    return f;
  return SubstitutionApplier(s).formula(f);
}

Formula apply_substitution(const Formula &f, const Substitution &s,
                           Dialect dialect) {
  Formula out = apply(f, s);
  validate(out, dialect);
  return out;
}

Substitution compose(const Substitution &second, const Substitution &first) {
  Substitution out;
  for (const auto &[name, g] : first.atoms)
    out.atoms.emplace(name, apply(g, second));
  for (const auto &[v, t] : first.vars)
    out.vars.emplace(v, apply(t, second));
  for (const auto &[name, g] : second.atoms)
    out.atoms.emplace(name, g);
  for (const auto &[v, t] : second.vars)
    out.vars.emplace(v, t);
  return out;
}

} // namespace jlog
