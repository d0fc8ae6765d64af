#include "jlog/derivation.hpp"

#include "jlog/axioms.hpp"
#include "jlog/errors.hpp"
#include "jlog/syntax.hpp"

namespace jlog {

const char *step_kind_name(Step::Kind k) {
  switch (k) {
  case Step::Kind::Hyp:
    return "hyp";
  case Step::Kind::Axiom:
    return "axiom";
  case Step::Kind::AN:
    return "an";
  case Step::Kind::MP:
    return "mp";
  }
  return "?";
}

FormulaSet Derivation::hypotheses() const {
  FormulaSet out;
  for (const auto &s : steps)
    if (s.kind == Step::Kind::Hyp)
      out.insert(s.formula);
  return out;
}

bool operator==(const Derivation &a, const Derivation &b) {
  bool same_cs = a.cs == b.cs || (a.cs && b.cs && *a.cs == *b.cs);
  return a.dialect == b.dialect && same_cs && a.steps == b.steps &&
         a.conclusion == b.conclusion;
}

Judgment check_derivation(const Derivation &d) {
  using E = DerivationError::Kind;
  if (d.steps.empty())
    throw DerivationError(E::IndexOrder, 0, "empty derivation");
  if (d.conclusion >= d.steps.size())
    throw DerivationError(E::IndexOrder, d.conclusion,
                          "conclusion index out of range");
  Judgment j;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step &s = d.steps[i];
    if (!s.formula.valid())
      throw DerivationError(E::BadHypothesis, i, "missing formula");
    try {
      validate(s.formula, d.dialect);
    } catch (const DialectError &e) {
      throw DerivationError(E::BadHypothesis, i, e.what());
    }
    switch (s.kind) {
    case Step::Kind::Hyp:
      j.hypotheses.insert(s.formula);
      break;
    case Step::Kind::Axiom: {
      const AxiomScheme *scheme = find_scheme(s.scheme);
      if (!scheme || !scheme->belongs_to(d.dialect))
        throw DerivationError(E::BadAxiom, i,
                              "'" + s.scheme + "' is not a scheme of " +
                                  dialect_name(d.dialect));
      if (!matches_scheme(s.formula, *scheme))
        throw DerivationError(E::BadAxiom, i,
                              print_formula(s.formula) +
                                  " is not an instance of " + s.scheme);
      break;
    }
    case Step::Kind::AN: {
      const Formula &f = s.formula;
      if (f.kind() != Formula::Kind::ProofOf ||
          f.term().kind() != Term::Kind::Constant)
        throw DerivationError(E::BadAN, i, "AN must conclude c:A");
      if (!d.cs || !cs_contains(*d.cs, f.term().name(), f.body()))
        throw DerivationError(E::BadAN, i,
                              "(" + f.term().name() + ", " +
                                  print_formula(f.body()) +
                                  ") is not in the constant specification");
      break;
    }
    case Step::Kind::MP: {
      if (s.major >= i || s.minor >= i)
        throw DerivationError(E::IndexOrder, i,
                              "MP must refer to earlier steps");
      const Formula &major = d.steps[s.major].formula;
      const Formula &minor = d.steps[s.minor].formula;
      if (major.kind() != Formula::Kind::Implies || major.left() != minor ||
          major.right() != s.formula)
        throw DerivationError(E::BadMP, i,
                              "step " + std::to_string(s.major) +
                                  " is not " + print_formula(minor) + " -> " +
                                  print_formula(s.formula));
      break;
    }
    }
  }
  j.conclusion = d.steps[d.conclusion].formula;
  return j;
}

DerivationBuilder::DerivationBuilder(Dialect dialect,
                                     std::shared_ptr<const ConstantSpec> cs)
    : dialect_(dialect), cs_(std::move(cs)) {}

std::size_t DerivationBuilder::push(Step s) {
  auto it = index_.find(s.formula);
  if (it != index_.end()) {
    bool old_hyp = steps_[it->second].kind == Step::Kind::Hyp;
    bool new_hyp = s.kind == Step::Kind::Hyp;
    if (!old_hyp || new_hyp)
      return it->second;
  }
  std::size_t i = steps_.size();
  index_[s.formula] = i;
  steps_.push_back(std::move(s));
  return i;
}

std::size_t DerivationBuilder::hyp(const Formula &f) {
  Step s;
  s.kind = Step::Kind::Hyp;
  s.formula = f;
  return push(std::move(s));
}

std::size_t DerivationBuilder::axiom(const std::string &scheme,
                                     const Formula &f) {
  Step s;
  s.kind = Step::Kind::Axiom;
  s.formula = f;
  s.scheme = scheme;
  return push(std::move(s));
}

std::size_t DerivationBuilder::axiom(const std::string &scheme,
                                     std::initializer_list<Formula> fs) {
  return axiom(scheme, axiom_instance(scheme, std::vector<Formula>(fs)));
}

std::size_t DerivationBuilder::an(const std::string &constant,
                                  const Formula &body) {
  Step s;
  s.kind = Step::Kind::AN;
  s.formula = Formula::proof_of(Term::constant(constant), body);
  return push(std::move(s));
}

std::size_t DerivationBuilder::mp(std::size_t major, std::size_t minor) {
  const Formula &m = steps_.at(major).formula;
  if (m.kind() != Formula::Kind::Implies || m.left() != steps_.at(minor).formula)
    throw Error("internal: ill-formed MP between " + print_formula(m) +
                " and " + print_formula(steps_.at(minor).formula));
  Step s;
  s.kind = Step::Kind::MP;
  s.formula = m.right();
  s.major = major;
  s.minor = minor;
  return push(std::move(s));
}

std::size_t DerivationBuilder::import(const Derivation &d) {
  std::vector<std::size_t> map(d.steps.size());
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step &s = d.steps[i];
    switch (s.kind) {
    case Step::Kind::Hyp:
      map[i] = hyp(s.formula);
      break;
    case Step::Kind::Axiom:
      map[i] = axiom(s.scheme, s.formula);
      break;
    case Step::Kind::AN: {
      Step c = s;
      map[i] = push(std::move(c));
      break;
    }
    case Step::Kind::MP:
      map[i] = mp(map[s.major], map[s.minor]);
      break;
    }
  }
  return map[d.conclusion];
}

std::optional<std::size_t> DerivationBuilder::find(const Formula &f) const {
  auto it = index_.find(f);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DerivationBuilder::proved(const Formula &f) const {
  auto it = index_.find(f);
  if (it == index_.end() || steps_[it->second].kind == Step::Kind::Hyp)
    return std::nullopt;
  return it->second;
}

Derivation DerivationBuilder::finish(std::size_t conclusion) const {
  std::vector<char> live(steps_.size(), 0);
  live.at(conclusion) = 1;
  for (std::size_t i = conclusion + 1; i-- > 0;) {
    if (!live[i] || steps_[i].kind != Step::Kind::MP)
      continue;
    live[steps_[i].major] = 1;
    live[steps_[i].minor] = 1;
  }
  std::vector<std::size_t> renumber(steps_.size());
  Derivation d;
  d.dialect = dialect_;
  d.cs = cs_;
  for (std::size_t i = 0; i <= conclusion; ++i) {
    if (!live[i])
      continue;
    Step s = steps_[i];
    if (s.kind == Step::Kind::MP) {
      s.major = renumber[s.major];
      s.minor = renumber[s.minor];
    }
    renumber[i] = d.steps.size();
    d.steps.push_back(std::move(s));
  }
  d.conclusion = d.steps.size() - 1;
  return d;
}

} // namespace jlog
