#include "jlog/realization.hpp"

#include "jlog/axioms.hpp"
#include "jlog/errors.hpp"
#include "jlog/hilbert.hpp"
#include "jlog/natural.hpp"
#include "jlog/syntax.hpp"

#include <algorithm>
#include <optional>

namespace jlog {

namespace {

Term left_sum(const std::vector<Term> &parts, bool just) {
  Term t = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    t = just ? Term::just_sum(t, parts[i]) : Term::sum(t, parts[i]);
  return t;
}

// Left/right turns from the root of a sum tree down to the leaf v.
bool find_leaf(const Term &t, const Term &v, std::vector<int> &path) {
  if (t == v)
    return true;
  if (t.kind() != Term::Kind::Sum && t.kind() != Term::Kind::JustSum)
    return false;
  path.push_back(0);
  if (find_leaf(t.left(), v, path))
    return true;
  path.back() = 1;
  if (find_leaf(t.right(), v, path))
    return true;
  path.pop_back();
  return false;
}

Formula scheme_instance(const char *id, const Binding &b) {
  return instantiate(find_scheme(id)->pattern, b);
}

class Realizer {
public:
  Realizer(const SequentProof &p, Calculus calculus, const ConstantSpec &cs,
           RealizationOptions options)
      : proof_(p), calculus_(calculus),
        dialect_(calculus == Calculus::GE ? Dialect::JE : Dialect::JEM),
        cs_(std::make_shared<const ConstantSpec>(cs)), options_(options),
        fa_(compute_families(p, calculus)) {
    plan_ = build_plan(fa_);
    terms_ = plan_.family_term;
  }

  RealizationResult run() {
    const Sequent &root = proof_->sequent;
    if (!root.antecedent.empty() || root.succedent.size() != 1)
      throw RealizationError(RealizationError::Kind::Unsupported,
                             "realization needs a proof of '=> A'");
    auto missing = check_axiomatically_appropriate(*cs_, dialect_);
    if (!missing.empty())
      throw NotAppropriate(missing, "constant specification is not "
                                    "axiomatically appropriate");
    const FlatProof &flat = fa_.flat;
    derivations_.assign(flat.nodes.size(), std::nullopt);
    for (std::size_t n : flat.postorder) {
      derivations_[n] = node_derivation(n);
      for (std::size_t c : flat.children[n])
        derivations_[c].reset();
      if (options_.check_stability)
        check_frontier();
    }
    Sequent top = annotated(0);
    DerivationBuilder b(dialect_, cs_);
    std::size_t line = by_contradiction(b, *derivations_[0], top.succedent[0]);
    RealizationResult r;
    r.calculus = calculus_;
    r.simplified = options_.simplify;
    r.realized = top.succedent[0];
    r.derivation = b.finish(line);
    r.log = std::move(log_);
    r.proof = proof_;
    r.plan = std::move(plan_);
    return r;
  }

private:
  Formula annotate(const Formula &f, std::size_t node,
                   SequentPosition &pos) const {
    if (f.kind() == Formula::Kind::Box) {
      std::size_t fam = fa_.family_of[fa_.box_id(node, pos)];
      pos.path.push_back(0);
      Formula body = annotate(f.body(), node, pos);
      pos.path.pop_back();
      return Formula::just_of(terms_[fam], body);
    }
    switch (f.child_count()) {
    case 0:
      return f;
    case 1: {
      pos.path.push_back(0);
      Formula body = annotate(f.body(), node, pos);
      pos.path.pop_back();
      return f.kind() == Formula::Kind::Not ? Formula::neg(body) : f;
    }
    default: {
      pos.path.push_back(0);
      Formula l = annotate(f.left(), node, pos);
      pos.path.back() = 1;
      Formula r = annotate(f.right(), node, pos);
      pos.path.pop_back();
      switch (f.kind()) {
      case Formula::Kind::Implies:
        return Formula::implies(l, r);
      case Formula::Kind::And:
        return Formula::conj(l, r);
      default:
        return Formula::disj(l, r);
      }
    }
    }
  }

  Sequent annotated(std::size_t node) const {
    const Sequent &s = fa_.flat.nodes[node]->sequent;
    Sequent out;
    for (Side side : {Side::Antecedent, Side::Succedent})
      for (std::size_t i = 0; i < s.side(side).size(); ++i) {
        SequentPosition pos{side, i, {}};
        out.side(side).push_back(annotate(s.side(side)[i], node, pos));
      }
    return out;
  }

  Derivation finish(DerivationBuilder &b, std::size_t line) const {
    return b.finish(line);
  }

  // The refutation of node n: Γ ∪ {D → ⊥ | D ∈ Δ} ⊢ ⊥.
  Derivation node_derivation(std::size_t n) {
    const ProofNode &node = *fa_.flat.nodes[n];
    const auto &kids = fa_.flat.children[n];
    auto child = [&](std::size_t k) -> const Derivation & {
      return *derivations_[kids[k]];
    };
    if (node.rule == Rule::RE || node.rule == Rule::RM)
      return modal_derivation(n);

    Sequent c = annotated(n);
    DerivationBuilder b(dialect_, cs_);
    Formula bot = Formula::bottom();
    Formula F;
    if (!node.principal.empty()) {
      const Principal &pr = node.principal[0];
      F = c.side(pr.side)[pr.index];
    }
    switch (node.rule) {
    case Rule::AxP:
      return finish(b, b.mp(b.hyp(neg(F)), b.hyp(F)));
    case Rule::AxBot:
      return finish(b, b.hyp(bot));
    case Rule::WL:
    case Rule::WR:
    case Rule::CL:
    case Rule::CR:
      return child(0);
    case Rule::ImpL: {
      const Formula &A = F.left();
      std::size_t a = by_contradiction(b, child(0), A);
      b.mp(b.hyp(F), a);
      return finish(b, b.import(child(1)));
    }
    case Rule::ImpR: {
      const Formula &A = F.left(), &B = F.right();
      // ~(A → B) ⊢ A
      DerivationBuilder e0(dialect_, cs_);
      Derivation d0 =
          e0.finish(efq(e0, e0.mp(e0.hyp(neg(A)), e0.hyp(A)), B));
      DerivationBuilder e1(dialect_, cs_);
      std::size_t ab = discharge(e1, d0, A);
      Derivation d1 = e1.finish(e1.mp(e1.hyp(neg(F)), ab));
      by_contradiction(b, d1, A);
      // ~(A → B) ⊢ ~B
      DerivationBuilder e2(dialect_, cs_);
      std::size_t ab2 = e2.mp(e2.axiom("K", {B, A}), e2.hyp(B));
      Derivation d2 = e2.finish(e2.mp(e2.hyp(neg(F)), ab2));
      discharge(b, d2, B);
      return finish(b, b.import(child(0)));
    }
    case Rule::AndL: {
      const Formula &A = F.left(), &B = F.right();
      std::size_t f = b.hyp(F);
      b.mp(b.axiom("AND_E1", {A, B}), f);
      b.mp(b.axiom("AND_E2", {A, B}), f);
      return finish(b, b.import(child(0)));
    }
    case Rule::AndR: {
      const Formula &A = F.left(), &B = F.right();
      std::size_t a = by_contradiction(b, child(0), A);
      std::size_t bb = by_contradiction(b, child(1), B);
      std::size_t ab = b.mp(b.mp(b.axiom("AND_I", {A, B}), a), bb);
      return finish(b, b.mp(b.hyp(neg(F)), ab));
    }
    case Rule::OrL: {
      const Formula &A = F.left(), &B = F.right();
      std::size_t na = discharge(b, child(0), A);
      std::size_t nb = discharge(b, child(1), B);
      std::size_t e = b.axiom("OR_E", {A, B, bot});
      return finish(b, b.mp(b.mp(b.mp(e, na), nb), b.hyp(F)));
    }
    case Rule::OrR: {
      const Formula &A = F.left(), &B = F.right();
      for (int side = 0; side < 2; ++side) {
        const Formula &X = side == 0 ? A : B;
        DerivationBuilder e(dialect_, cs_);
        std::size_t intro = e.axiom(side == 0 ? "OR_I1" : "OR_I2", {A, B});
        std::size_t f = e.mp(intro, e.hyp(X));
        discharge(b, e.finish(e.mp(e.hyp(neg(F)), f)), X);
      }
      return finish(b, b.import(child(0)));
    }
    case Rule::NotL: {
      const Formula &A = F.body();
      std::size_t a = by_contradiction(b, child(0), A);
      std::size_t na = b.mp(b.axiom("NOT_E", {A}), b.hyp(F));
      return finish(b, b.mp(na, a));
    }
    case Rule::NotR: {
      const Formula &A = F.body();
      std::size_t na = discharge(b, child(0), A);
      std::size_t f = b.mp(b.axiom("NOT_I", {A}), na);
      return finish(b, b.mp(b.hyp(neg(F)), f));
    }
    default:
      throw RealizationError(RealizationError::Kind::Unsupported,
                             std::string("unexpected rule ") +
                                 rule_name(node.rule));
    }
  }

  // ⊢ A → B from a refutation of A ⇒ B, internalized.
  Internalized internalize_premise(const Derivation &d, const Formula &A,
                                   const Formula &B) {
    DerivationBuilder s(dialect_, cs_);
    Derivation ab = s.finish(by_contradiction(s, d, B));
    return internalize(deduction_transform(ab, A));
  }

  // σ on every family term and every pending derivation except the
  // premises of node n, which are consumed already.
  void substitute(const Substitution &sigma, std::size_t n) {
    SubstitutionApplier ap(sigma);
    for (auto &t : terms_)
      t = ap.term(t);
    const auto &kids = fa_.flat.children[n];
    for (std::size_t i = 0; i < derivations_.size(); ++i)
      if (derivations_[i] &&
          std::find(kids.begin(), kids.end(), i) == kids.end())
        *derivations_[i] = substitute_derivation(*derivations_[i], sigma);
  }

  Derivation modal_derivation(std::size_t n) {
    const ProofNode &node = *fa_.flat.nodes[n];
    const auto &kids = fa_.flat.children[n];
    Term z = plan_.provisional.at(n);

    // Premise sides before σ.
    Sequent before = annotated(n);
    const Formula &lhs = before.antecedent[0];
    const Formula &rhs = before.succedent[0];
    Term sum = node.rule == Rule::RE ? rhs.term().inner() : rhs.term();
    std::vector<int> path;
    if (!find_leaf(sum, z, path))
      throw RealizationError(RealizationError::Kind::Unsupported,
                             "provisional variable not found in its class");

    RealizationStep step;
    step.node = n;
    step.rule = node.rule;
    step.provisional = z;

    std::vector<Internalized> lams;
    lams.push_back(internalize_premise(*derivations_[kids[0]], lhs.body(),
                                       rhs.body()));
    if (node.rule == Rule::RE)
      lams.push_back(internalize_premise(*derivations_[kids[1]], rhs.body(),
                                         lhs.body()));
    Term replacement;
    if (node.rule == Rule::RE) {
      const Term &l1 = lams[0].term, &l2 = lams[1].term;
      replacement = options_.simplify && l1 == l2 ? l1 : Term::sum(l1, l2);
    } else {
      replacement = Term::m(lams[0].term, lhs.term());
    }
    step.replacement = replacement;
    Substitution sigma;
    sigma.vars.emplace(z, replacement);
    substitute(sigma, n);
    for (auto &l : lams) {
      l.derivation = substitute_derivation(l.derivation, sigma);
      step.terms.push_back(l.term);
      step.proves.push_back(l.derivation.conclusion_formula().body());
    }
    log_.push_back(step);

    Sequent c = annotated(n);
    const Formula &L = c.antecedent[0], &R = c.succedent[0];
    const Formula &A = L.body(), &B = R.body();
    DerivationBuilder b(dialect_, cs_);
    Formula bot = Formula::bottom();

    // Walks up from the leaf to the whole sum, one disjunction and one
    // sum axiom per level.
    auto climb = [&](std::size_t line, const Term &whole, const Formula &body,
                     bool just) {
      std::vector<Term> spine{whole};
      for (int turn : path)
        spine.push_back(turn == 0 ? spine.back().left() : spine.back().right());
      for (std::size_t i = path.size(); i-- > 0;) {
        const Term &parent = spine[i];
        Binding bd;
        auto holds = [&](const Term &t) {
          return just ? Formula::just_of(t, body) : Formula::proof_of(t, body);
        };
        Formula l = holds(parent.left()), r = holds(parent.right());
        std::size_t d = b.mp(b.axiom(path[i] == 0 ? "OR_I1" : "OR_I2",
                                     {l, r}),
                             line);
        if (just) {
          bd.terms = {{"T", parent.left()}, {"S", parent.right()}};
          bd.formulas = {{"F", body}};
          line = b.mp(b.axiom("jplus2", scheme_instance("jplus2", bd)), d);
        } else {
          bd.terms = {{"L", parent.left()}, {"K", parent.right()}};
          bd.formulas = {{"F", body}};
          line = b.mp(b.axiom("jplus1", scheme_instance("jplus1", bd)), d);
        }
      }
      return line;
    };

    if (node.rule == Rule::RE) {
      const Term tau = L.term().inner();
      Formula X = Formula::implies(A, B), Y = Formula::implies(B, A);
      std::size_t lx = b.import(lams[0].derivation);
      std::size_t ly = b.import(lams[1].derivation);
      const Term &l1 = lams[0].term, &l2 = lams[1].term;
      if (!(replacement == l1)) {
        Binding bx{{{"F", X}}, {{"L", l1}, {"K", l2}}};
        std::size_t ox = b.mp(b.axiom("OR_I1", {Formula::proof_of(l1, X),
                                                Formula::proof_of(l2, X)}),
                              lx);
        lx = b.mp(b.axiom("jplus1", scheme_instance("jplus1", bx)), ox);
        Binding by{{{"F", Y}}, {{"L", l1}, {"K", l2}}};
        std::size_t oy = b.mp(b.axiom("OR_I2", {Formula::proof_of(l1, Y),
                                                Formula::proof_of(l2, Y)}),
                              ly);
        ly = b.mp(b.axiom("jplus1", scheme_instance("jplus1", by)), oy);
      }
      lx = climb(lx, tau, X, false);
      ly = climb(ly, tau, Y, false);
      std::size_t both = b.mp(
          b.mp(b.axiom("AND_I", {b.formula(lx), b.formula(ly)}), lx), ly);
      Binding be{{{"F", A}, {"G", B}}, {{"L", tau}}};
      std::size_t imp = b.mp(b.axiom("je", scheme_instance("je", be)), both);
      std::size_t r = b.mp(imp, b.hyp(L));
      return finish(b, b.mp(b.hyp(neg(R)), r));
    }

    const Term &s = L.term();
    const Term &lam = lams[0].term;
    std::size_t l = b.import(lams[0].derivation);
    Binding bm{{{"F", A}, {"G", B}}, {{"L", lam}, {"T", s}}};
    std::size_t imp = b.mp(b.axiom("jm", scheme_instance("jm", bm)), l);
    std::size_t r = b.mp(imp, b.hyp(L));
    r = climb(r, R.term(), B, true);
    return finish(b, b.mp(b.hyp(neg(R)), r));
  }

  void check_frontier() const {
    for (std::size_t i = 0; i < derivations_.size(); ++i) {
      if (!derivations_[i])
        continue;
      Judgment j;
      try {
        j = check_derivation(*derivations_[i]);
      } catch (const DerivationError &e) {
        throw RealizationError(RealizationError::Kind::DerivationFails,
                               "node " + std::to_string(i) + ": " + e.what());
      }
      Sequent s = annotated(i);
      FormulaSet allowed(s.antecedent.begin(), s.antecedent.end());
      for (const auto &f : s.succedent)
        allowed.insert(neg(f));
      bool ok = j.conclusion == Formula::bottom();
      for (const auto &h : j.hypotheses)
        ok = ok && allowed.count(h);
      if (!ok)
        throw RealizationError(RealizationError::Kind::DerivationFails,
                               "node " + std::to_string(i) +
                                   ": derivation does not match " +
                                   print_sequent(s));
    }
  }

  SequentProof proof_;
  Calculus calculus_;
  Dialect dialect_;
  std::shared_ptr<const ConstantSpec> cs_;
  RealizationOptions options_;
  FamilyAnalysis fa_;
  RealizationPlan plan_;
  std::vector<Term> terms_;
  std::vector<std::optional<Derivation>> derivations_;
  std::vector<RealizationStep> log_;
};

void collect_negative(const Formula &f, Polarity pol, std::vector<Term> &out) {
  switch (f.kind()) {
  case Formula::Kind::JustOf:
  case Formula::Kind::ProofOf:
    if (pol == Polarity::Negative)
      out.push_back(f.term());
    collect_negative(f.body(), pol, out);
    return;
  case Formula::Kind::Implies:
    collect_negative(f.left(), flip(pol), out);
    collect_negative(f.right(), pol, out);
    return;
  case Formula::Kind::Not:
    collect_negative(f.body(), flip(pol), out);
    return;
  default:
    for (std::size_t i = 0; i < f.child_count(); ++i)
      collect_negative(f.child(i), pol, out);
  }
}

} // namespace

RealizationPlan build_plan(const FamilyAnalysis &fa) {
  RealizationPlan plan;
  plan.calculus = fa.calculus;
  plan.family_term.resize(fa.families.size());
  unsigned plain = 0;
  unsigned provisional = 1;
  if (fa.calculus == Calculus::GE) {
    for (std::size_t f = 0; f < fa.families.size(); ++f)
      if (!fa.families[f].essential)
        plan.family_term[f] = Term::e(Term::proof_var(plain++));
    for (const auto &cls : fa.classes) {
      std::vector<Term> parts;
      for (std::size_t n : cls.instances) {
        Term z = Term::proof_var(provisional++, true);
        plan.provisional.emplace(n, z);
        parts.push_back(z);
      }
      Term t = Term::e(left_sum(parts, false));
      for (std::size_t f : cls.families)
        plan.family_term[f] = t;
    }
  } else {
    for (std::size_t f = 0; f < fa.families.size(); ++f) {
      const Family &fam = fa.families[f];
      if (!fam.essential) {
        plan.family_term[f] = Term::just_var(plain++);
        continue;
      }
      std::vector<Term> parts;
      for (std::size_t n : fam.introduced_by) {
        Term v = Term::just_var(provisional++, true);
        plan.provisional.emplace(n, v);
        parts.push_back(v);
      }
      plan.family_term[f] = left_sum(parts, true);
    }
  }
  return plan;
}

RealizationResult realize(const SequentProof &p, Calculus calculus,
                          const ConstantSpec &cs, RealizationOptions options) {
  return Realizer(p, calculus, cs, options).run();
}

RealizationResult simplify(const RealizationResult &result,
                           const ConstantSpec &cs) {
  RealizationOptions options;
  options.simplify = true;
  RealizationResult out = realize(result.proof, result.calculus, cs, options);
  try {
    Judgment j = check_derivation(out.derivation);
    if (j.hypotheses.empty() && j.conclusion == out.realized)
      return out;
  } catch (const DerivationError &) {
  }
  return result;
}

void verify_realization(const Formula &realized, const Derivation &derivation,
                        const Formula &source, Calculus calculus,
                        const ConstantSpec &cs) {
  using K = RealizationError::Kind;
  if (realized.has_provisional())
    throw RealizationError(K::ProvisionalLeak,
                           "provisional variable in " + print_formula(realized));
  for (const auto &s : derivation.steps)
    if (s.formula.has_provisional())
      throw RealizationError(K::ProvisionalLeak,
                             "provisional variable in derivation step " +
                                 print_formula(s.formula));
  Formula back;
  try {
    back = forgetful(realized);
  } catch (const ProofOfPresent &) {
    throw RealizationError(K::RoundtripMismatch,
                           "realization contains a proof term prefix");
  }
  if (!(back == source))
    throw RealizationError(K::RoundtripMismatch,
                           print_formula(back) + " is not " +
                               print_formula(source));
  Dialect d = calculus == Calculus::GE ? Dialect::JE : Dialect::JEM;
  if (derivation.dialect != d)
    throw RealizationError(K::DerivationFails, "derivation in wrong dialect");
  if (derivation.cs && !(*derivation.cs == cs))
    throw RealizationError(K::DerivationFails,
                           "derivation uses another constant specification");
  try {
    Judgment j = check_derivation(derivation);
    if (!j.hypotheses.empty())
      throw RealizationError(K::DerivationFails, "derivation has hypotheses");
    if (!(j.conclusion == realized))
      throw RealizationError(K::DerivationFails,
                             "derivation proves " +
                                 print_formula(j.conclusion));
  } catch (const DerivationError &e) {
    throw RealizationError(K::DerivationFails, e.what());
  }
  // Normality is a GM notion: negative boxes of GE may be essential.
  if (calculus != Calculus::GM)
    return;
  std::vector<Term> negative;
  collect_negative(realized, Polarity::Positive, negative);
  std::set<Term> seen;
  for (const Term &t : negative)
    if (t.kind() != Term::Kind::JustVar || t.provisional() ||
        !seen.insert(t).second)
      throw RealizationError(K::NotNormal, "negative occurrence realized by " +
                                               print_term(t));
}

void verify_realization(const RealizationResult &result, const Formula &source,
                        Calculus calculus, const ConstantSpec &cs) {
  verify_realization(result.realized, result.derivation, source, calculus, cs);
}

std::optional<RealizationResult> realize_formula(const Formula &f,
                                                 Calculus calculus,
                                                 const ConstantSpec &cs,
                                                 std::size_t depth,
                                                 RealizationOptions options) {
  auto p = prove_bounded(Sequent{{}, {f}}, calculus, depth);
  if (!p)
    return std::nullopt;
  return realize(*p, calculus, cs, options);
}

} // namespace jlog
