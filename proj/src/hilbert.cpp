#include "jlog/hilbert.hpp"

#include "jlog/axioms.hpp"
#include "jlog/errors.hpp"
#include "jlog/syntax.hpp"

namespace jlog {

namespace {

// A → F for a line F that does not use the discharged formula:
// F, F → (A → F), A → F.
std::size_t lift(DerivationBuilder &b, std::size_t line, const Formula &a) {
  const Formula f = b.formula(line);
  std::size_t k = b.axiom("K", {f, a});
  return b.mp(k, line);
}

// A → A from K and S.
std::size_t identity(DerivationBuilder &b, const Formula &a) {
  Formula aa = Formula::implies(a, a);
  std::size_t k1 = b.axiom("K", {a, aa});
  std::size_t s = b.axiom("S", {a, aa, a});
  std::size_t m1 = b.mp(s, k1);
  std::size_t k2 = b.axiom("K", {a, a});
  return b.mp(m1, k2);
}

std::size_t copy_step(DerivationBuilder &b, const Step &s) {
  switch (s.kind) {
  case Step::Kind::Hyp:
    return b.hyp(s.formula);
  case Step::Kind::Axiom:
    return b.axiom(s.scheme, s.formula);
  case Step::Kind::AN:
    return b.an(s.formula.term().name(), s.formula.body());
  case Step::Kind::MP:
    break;
  }
  throw Error("internal: copy_step on MP");
}

} // namespace

Derivation deduction_transform(const Derivation &d, const Formula &a,
                               DeductionOptions options) {
  try {
    check_derivation(d);
  } catch (const DerivationError &e) {
    throw NotDerivable(std::string("deduction: input does not check: ") +
                       e.what());
  }
  const std::size_t n = d.steps.size();
  std::vector<char> depends(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Step &s = d.steps[i];
    if (s.kind == Step::Kind::Hyp)
      depends[i] = s.formula == a;
    else if (s.kind == Step::Kind::MP)
      depends[i] = depends[s.major] || depends[s.minor];
  }

  DerivationBuilder b(d.dialect, d.cs);
  // plain[i]: line of F_i itself (independent lines only, when skipping);
  // impl[i]: line of A → F_i.
  std::vector<std::size_t> plain(n), impl(n);
  std::vector<char> has_plain(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Step &s = d.steps[i];
    if (options.skip_independent && !depends[i]) {
      plain[i] = s.kind == Step::Kind::MP ? b.mp(plain[s.major], plain[s.minor])
                                          : copy_step(b, s);
      has_plain[i] = 1;
      impl[i] = lift(b, plain[i], a);
      continue;
    }
    if (s.kind == Step::Kind::Hyp && s.formula == a) {
      impl[i] = identity(b, a);
    } else if (s.kind != Step::Kind::MP) {
      plain[i] = copy_step(b, s);
      has_plain[i] = 1;
      impl[i] = lift(b, plain[i], a);
    } else {
      // A → (G → F), A → G  ⊢  A → F via S.
      const Formula &major = d.steps[s.major].formula;
      std::size_t sx = b.axiom("S", {a, major.left(), major.right()});
      std::size_t m1 = b.mp(sx, impl[s.major]);
      impl[i] = b.mp(m1, impl[s.minor]);
    }
  }
  return b.finish(impl[d.conclusion]);
}

Internalized internalize(const Derivation &d) {
  Judgment j = check_derivation(d);
  if (!j.hypotheses.empty())
    throw HasHypotheses("internalization needs a derivation without "
                        "hypotheses");
  if (!d.cs)
    throw NotAppropriate({}, "no constant specification");
  auto missing = check_axiomatically_appropriate(*d.cs, d.dialect);
  if (!missing.empty()) {
    std::string list;
    for (const auto &m : missing)
      list += (list.empty() ? "" : ", ") + m;
    throw NotAppropriate(missing, "constant specification misses " + list);
  }

  DerivationBuilder b(d.dialect, d.cs);
  const std::size_t n = d.steps.size();
  std::vector<Term> term(n);
  std::vector<std::size_t> line(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Step &s = d.steps[i];
    switch (s.kind) {
    case Step::Kind::Hyp:
      throw HasHypotheses("unexpected hypothesis");
    case Step::Kind::Axiom: {
      std::string c = *constant_for(*d.cs, s.scheme);
      term[i] = Term::constant(c);
      line[i] = b.an(c, s.formula);
      break;
    }
    case Step::Kind::AN: {
      // c:G, c:G → !c:c:G
      const Term &c = s.formula.term();
      std::size_t own = b.an(c.name(), s.formula.body());
      Binding bind;
      bind.terms.emplace("L", c);
      bind.formulas.emplace("F", s.formula.body());
      Formula j4 = instantiate(find_scheme("j4")->pattern, bind);
      std::size_t ax = b.axiom("j4", j4);
      term[i] = Term::bang(c);
      line[i] = b.mp(ax, own);
      break;
    }
    case Step::Kind::MP: {
      // t1:(G → F), t2:G  ⊢  (t1·t2):F via j.
      const Formula &major = d.steps[s.major].formula;
      Binding bind;
      bind.terms.emplace("L", term[s.major]);
      bind.terms.emplace("K", term[s.minor]);
      bind.formulas.emplace("F", major.left());
      bind.formulas.emplace("G", major.right());
      Formula jx = instantiate(find_scheme("j")->pattern, bind);
      std::size_t ax = b.axiom("j", jx);
      std::size_t m1 = b.mp(ax, line[s.major]);
      line[i] = b.mp(m1, line[s.minor]);
      term[i] = Term::app(term[s.major], term[s.minor]);
      break;
    }
    }
  }
  return {term[d.conclusion], b.finish(line[d.conclusion])};
}

Derivation substitute_derivation(const Derivation &d, const Substitution &s) {
  if (s.empty())
    return d;
  Derivation out = d;
  SubstitutionApplier applier(s);
  for (auto &step : out.steps) {
    step.formula = applier.formula(step.formula);
    validate(step.formula, d.dialect);
  }
  return out;
}

} // namespace jlog
