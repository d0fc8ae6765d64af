#include "support.hpp"

#include "jlog/axioms.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace support {

namespace {

const std::vector<std::string> kAtoms = {"A", "B", "C"};

} // namespace

Term Gen::proof_term(Dialect d, unsigned depth) {
  if (depth <= 1 || pick(3) == 0) {
    switch (pick(6)) {
    case 0:
      return Term::constant("c" + std::to_string(pick(3)));
    case 1:
      return Term::constant(pick(2) ? "c_K" : "c_jt");
    case 2:
      return Term::proof_var(static_cast<unsigned>(pick(3)), pick(8) == 0);
    default:
      return Term::proof_var(static_cast<unsigned>(pick(3)));
    }
  }
  switch (pick(d == Dialect::JE ? 3 : 2)) {
  case 0:
    return Term::app(proof_term(d, depth - 1), proof_term(d, depth - 1));
  case 1:
    return Term::bang(proof_term(d, depth - 1));
  default:
    return Term::sum(proof_term(d, depth - 1), proof_term(d, depth - 1));
  }
}

Term Gen::just_term(Dialect d, unsigned depth) {
  if (d == Dialect::JE)
    return Term::e(proof_term(d, depth > 1 ? depth - 1 : 1));
  if (depth <= 1 || pick(3) == 0)
    return Term::just_var(static_cast<unsigned>(pick(3)), pick(8) == 0);
  if (coin())
    return Term::m(proof_term(d, depth - 1), just_term(d, depth - 1));
  return Term::just_sum(just_term(d, depth - 1), just_term(d, depth - 1));
}

Formula Gen::prop(unsigned depth, const std::vector<std::string> &atoms) {
  if (depth == 0 || pick(3) == 0)
    return pick(8) == 0 ? Formula::bottom() : Formula::atom(atoms[pick(atoms.size())]);
  switch (pick(4)) {
  case 0:
    return Formula::implies(prop(depth - 1, atoms), prop(depth - 1, atoms));
  case 1:
    return Formula::conj(prop(depth - 1, atoms), prop(depth - 1, atoms));
  case 2:
    return Formula::disj(prop(depth - 1, atoms), prop(depth - 1, atoms));
  default:
    return Formula::neg(prop(depth - 1, atoms));
  }
}

Formula Gen::modal(unsigned depth, const std::vector<std::string> &atoms) {
  if (depth == 0 || pick(4) == 0)
    return pick(8) == 0 ? Formula::bottom() : Formula::atom(atoms[pick(atoms.size())]);
  switch (pick(5)) {
  case 0:
    return Formula::implies(modal(depth - 1, atoms), modal(depth - 1, atoms));
  case 1:
    return Formula::conj(modal(depth - 1, atoms), modal(depth - 1, atoms));
  case 2:
    return Formula::disj(modal(depth - 1, atoms), modal(depth - 1, atoms));
  case 3:
    return Formula::neg(modal(depth - 1, atoms));
  default:
    return Formula::box(modal(depth - 1, atoms));
  }
}

Formula Gen::formula(Dialect d, unsigned depth) {
  if (d == Dialect::Modal)
    return modal(depth, kAtoms);
  if (depth == 0 || pick(4) == 0)
    return pick(8) == 0 ? Formula::bottom() : Formula::atom(kAtoms[pick(3)]);
  switch (pick(6)) {
  case 0:
    return Formula::implies(formula(d, depth - 1), formula(d, depth - 1));
  case 1:
    return Formula::conj(formula(d, depth - 1), formula(d, depth - 1));
  case 2:
    return Formula::disj(formula(d, depth - 1), formula(d, depth - 1));
  case 3:
    return Formula::neg(formula(d, depth - 1));
  case 4:
    return Formula::proof_of(proof_term(d, 3), formula(d, depth - 1));
  default:
    return Formula::just_of(just_term(d, 3), formula(d, depth - 1));
  }
}

bool tautology(const Formula &f) {
  std::vector<Formula> opaque;
  std::function<void(const Formula &)> collect = [&](const Formula &g) {
    switch (g.kind()) {
    case Formula::Kind::Atom:
    case Formula::Kind::Box:
    case Formula::Kind::ProofOf:
    case Formula::Kind::JustOf:
      if (std::find(opaque.begin(), opaque.end(), g) == opaque.end())
        opaque.push_back(g);
      return;
    case Formula::Kind::Bottom:
      return;
    default:
      for (std::size_t i = 0; i < g.child_count(); ++i)
        collect(g.child(i));
    }
  };
  collect(f);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << opaque.size()); ++v) {
    std::function<bool(const Formula &)> val = [&](const Formula &g) -> bool {
      switch (g.kind()) {
      case Formula::Kind::Bottom:
        return false;
      case Formula::Kind::Implies:
        return !val(g.left()) || val(g.right());
      case Formula::Kind::And:
        return val(g.left()) && val(g.right());
      case Formula::Kind::Or:
        return val(g.left()) || val(g.right());
      case Formula::Kind::Not:
        return !val(g.body());
      default: {
        auto i = std::find(opaque.begin(), opaque.end(), g) - opaque.begin();
        return v >> i & 1;
      }
      }
    };
    if (!val(f))
      return false;
  }
  return true;
}

Formula erase(const Formula &f) {
  switch (f.kind()) {
  case Formula::Kind::Atom:
  case Formula::Kind::Bottom:
    return f;
  case Formula::Kind::Implies:
    return Formula::implies(erase(f.left()), erase(f.right()));
  case Formula::Kind::And:
    return Formula::conj(erase(f.left()), erase(f.right()));
  case Formula::Kind::Or:
    return Formula::disj(erase(f.left()), erase(f.right()));
  case Formula::Kind::Not:
    return Formula::neg(erase(f.body()));
  case Formula::Kind::Box:
  case Formula::Kind::JustOf:
    return Formula::box(erase(f.body()));
  default:
    return Formula();
  }
}

bool nbhd_truth(const NeighborhoodModel &m, std::size_t w, const Formula &f) {
  switch (f.kind()) {
  case Formula::Kind::Atom:
    return m.valuation[w].count(f.name()) > 0;
  case Formula::Kind::Bottom:
    return false;
  case Formula::Kind::Implies:
    return !nbhd_truth(m, w, f.left()) || nbhd_truth(m, w, f.right());
  case Formula::Kind::And:
    return nbhd_truth(m, w, f.left()) && nbhd_truth(m, w, f.right());
  case Formula::Kind::Or:
    return nbhd_truth(m, w, f.left()) || nbhd_truth(m, w, f.right());
  case Formula::Kind::Not:
    return !nbhd_truth(m, w, f.body());
  case Formula::Kind::Box: {
    WorldSet s = 0;
    for (std::size_t u = 0; u < m.worlds; ++u)
      if (nbhd_truth(m, u, f.body()))
        s |= WorldSet{1} << u;
    return m.neighborhoods[w].count(s) > 0;
  }
  default:
    throw std::logic_error("not a modal formula");
  }
}

std::vector<Formula> all_imp_box(unsigned depth,
                                 const std::vector<std::string> &atoms) {
  std::vector<Formula> level;
  for (const auto &a : atoms)
    level.push_back(Formula::atom(a));
  for (unsigned d = 1; d <= depth; ++d) {
    std::vector<Formula> next = level;
    for (const auto &f : level)
      if (f.depth() == d - 1)
        next.push_back(Formula::box(f));
    for (const auto &f : level)
      for (const auto &g : level)
        if (std::max(f.depth(), g.depth()) == d - 1)
          next.push_back(Formula::implies(f, g));
    level = std::move(next);
  }
  return level;
}

namespace {

bool variable_hole(const std::string &name) {
  return !name.empty() && (std::islower(static_cast<unsigned char>(name[0])) ||
                           name[0] == 'X');
}

bool ground(const Term &t) {
  switch (t.kind()) {
  case Term::Kind::Constant:
    return true;
  case Term::Kind::App:
    return ground(t.left()) && ground(t.right());
  case Term::Kind::Bang:
    return ground(t.inner());
  default:
    return false;
  }
}

struct Matcher {
  ShapeMatch &out;

  bool fail(const std::string &why) {
    if (out.why.empty())
      out.why = why;
    return false;
  }

  bool term(const Term &p, const Term &t) {
    if (p.kind() == Term::Kind::MetaProof || p.kind() == Term::Kind::MetaJust) {
      const std::string &name = p.name();
      auto it = out.holes.find(name);
      if (it != out.holes.end())
        return it->second == t || fail("hole " + name + " bound twice");
      if (variable_hole(name)) {
        if (!t.is_variable() || t.provisional())
          return fail("hole " + name + " needs a variable");
        for (const auto &[other, v] : out.holes)
          if (variable_hole(other) && v == t)
            return fail("holes " + other + " and " + name + " coincide");
      } else if (!ground(t)) {
        return fail("hole " + name + " needs a variable-free term");
      }
      out.holes.emplace(name, t);
      return true;
    }
    if (p.kind() != t.kind())
      return fail("term kinds differ");
    switch (p.kind()) {
    case Term::Kind::Constant:
      return p.name() == t.name() || fail("constants differ");
    case Term::Kind::ProofVar:
    case Term::Kind::JustVar:
      return (p.index() == t.index() && p.provisional() == t.provisional()) ||
             fail("variables differ");
    case Term::Kind::Bang:
    case Term::Kind::E:
      return term(p.inner(), t.inner());
    default:
      return term(p.left(), t.left()) && term(p.right(), t.right());
    }
  }

  bool formula(const Formula &p, const Formula &f) {
    if (p.kind() != f.kind())
      return fail("formula kinds differ");
    if (p.kind() == Formula::Kind::Atom)
      return p.name() == f.name() || fail("atoms differ");
    if ((p.kind() == Formula::Kind::ProofOf ||
         p.kind() == Formula::Kind::JustOf) &&
        !term(p.term(), f.term()))
      return false;
    for (std::size_t i = 0; i < p.child_count(); ++i)
      if (!formula(p.child(i), f.child(i)))
        return false;
    return true;
  }
};

} // namespace

ShapeMatch match_shape(const Formula &pattern, const Formula &f) {
  ShapeMatch m;
  m.ok = Matcher{m}.formula(pattern, f);
  return m;
}

// Forward proof generation.

Formula ForwardGen::small() {
  static const std::vector<std::string> atoms = {"A", "B"};
  return gen_.modal(1, atoms);
}

SequentProof ForwardGen::axiom() {
  if (gen_.pick(5) == 0)
    return make_node(Rule::AxBot, {{Formula::bottom()}, {}},
                     {{Side::Antecedent, 0}}, {});
  Formula a = Formula::atom(gen_.coin() ? "A" : "B");
  return make_node(Rule::AxP, {{a}, {a}},
                   {{Side::Antecedent, 0}, {Side::Succedent, 0}}, {});
}

namespace {

Sequent without(const Sequent &s, Side side, std::vector<std::size_t> drop) {
  Sequent out = s;
  std::sort(drop.rbegin(), drop.rend());
  for (auto i : drop)
    out.side(side).erase(out.side(side).begin() + static_cast<long>(i));
  return out;
}

SequentProof unary(Rule r, const SequentProof &p, Sequent conclusion, Side side) {
  std::size_t at = conclusion.side(side).size() - 1;
  return make_node(r, std::move(conclusion), {{side, at}}, {p});
}

Sequent context_union(const Sequent &a, const Sequent &b) {
  Sequent out = a;
  for (Side s : {Side::Antecedent, Side::Succedent})
    out.side(s).insert(out.side(s).end(), b.side(s).begin(), b.side(s).end());
  return out;
}

} // namespace

SequentProof ForwardGen::pack(SequentProof p) {
  for (;;) {
    const Sequent &s = p->sequent;
    if (s.antecedent.size() > 1) {
      Sequent c = without(s, Side::Antecedent, {0, 1});
      c.antecedent.push_back(Formula::conj(s.antecedent[0], s.antecedent[1]));
      p = unary(Rule::AndL, p, c, Side::Antecedent);
    } else if (s.succedent.size() > 1) {
      Sequent c = without(s, Side::Succedent, {0, 1});
      c.succedent.push_back(Formula::disj(s.succedent[0], s.succedent[1]));
      p = unary(Rule::OrR, p, c, Side::Succedent);
    } else if (s.antecedent.empty()) {
      Sequent c = s;
      c.antecedent.push_back(small());
      p = unary(Rule::WL, p, c, Side::Antecedent);
    } else if (s.succedent.empty()) {
      Sequent c = s;
      c.succedent.push_back(small());
      p = unary(Rule::WR, p, c, Side::Succedent);
    } else {
      return p;
    }
  }
}

SequentProof ForwardGen::close(SequentProof p) {
  for (;;) {
    const Sequent &s = p->sequent;
    if (s.succedent.size() > 1) {
      Sequent c = without(s, Side::Succedent, {0, 1});
      c.succedent.push_back(Formula::disj(s.succedent[0], s.succedent[1]));
      p = unary(Rule::OrR, p, c, Side::Succedent);
    } else if (s.succedent.empty()) {
      Sequent c = s;
      c.succedent.push_back(small());
      p = unary(Rule::WR, p, c, Side::Succedent);
    } else if (!s.antecedent.empty()) {
      Sequent c = without(s, Side::Antecedent, {s.antecedent.size() - 1});
      c.succedent = {Formula::implies(s.antecedent.back(), s.succedent[0])};
      p = unary(Rule::ImpR, p, c, Side::Succedent);
    } else {
      return p;
    }
  }
}

SequentProof ForwardGen::identity(const Formula &f) {
  constexpr Side A = Side::Antecedent;
  constexpr Side S = Side::Succedent;
  switch (f.kind()) {
  case Formula::Kind::Atom:
    return make_node(Rule::AxP, {{f}, {f}}, {{A, 0}, {S, 0}}, {});
  case Formula::Kind::Bottom: {
    auto p = make_node(Rule::AxBot, {{f}, {}}, {{A, 0}}, {});
    return make_node(Rule::WR, {{f}, {f}}, {{S, 0}}, {p});
  }
  case Formula::Kind::Implies: {
    const Formula &a = f.left(), &b = f.right();
    auto p1 = weaken_to(identity(a), {{a}, {a, b}});
    auto p2 = weaken_to(identity(b), {{b, a}, {b}});
    auto l = make_node(Rule::ImpL, {{a, f}, {b}}, {{A, 1}}, {p1, p2});
    return make_node(Rule::ImpR, {{f}, {f}}, {{S, 0}}, {l});
  }
  case Formula::Kind::And: {
    const Formula &a = f.left(), &b = f.right();
    auto p1 = make_node(Rule::AndL, {{f}, {a}}, {{A, 0}},
                        {weaken_to(identity(a), {{a, b}, {a}})});
    auto p2 = make_node(Rule::AndL, {{f}, {b}}, {{A, 0}},
                        {weaken_to(identity(b), {{a, b}, {b}})});
    return make_node(Rule::AndR, {{f}, {f}}, {{S, 0}}, {p1, p2});
  }
  case Formula::Kind::Or: {
    const Formula &a = f.left(), &b = f.right();
    auto p1 = make_node(Rule::OrR, {{a}, {f}}, {{S, 0}},
                        {weaken_to(identity(a), {{a}, {a, b}})});
    auto p2 = make_node(Rule::OrR, {{b}, {f}}, {{S, 0}},
                        {weaken_to(identity(b), {{b}, {a, b}})});
    return make_node(Rule::OrL, {{f}, {f}}, {{A, 0}}, {p1, p2});
  }
  case Formula::Kind::Not: {
    const Formula &a = f.body();
    auto l = make_node(Rule::NotL, {{f, a}, {}}, {{A, 0}}, {identity(a)});
    return make_node(Rule::NotR, {{f}, {f}}, {{S, 0}}, {l});
  }
  case Formula::Kind::Box: {
    auto p = identity(f.body());
    if (c_ == Calculus::GE)
      return make_node(Rule::RE, {{f}, {f}}, {{A, 0}, {S, 0}}, {p, p});
    return make_node(Rule::RM, {{f}, {f}}, {{A, 0}, {S, 0}}, {p});
  }
  default:
    throw std::logic_error("identity: not a modal formula");
  }
}

SequentProof ForwardGen::proof(unsigned depth) {
  if (depth == 0)
    return axiom();
  constexpr Side A = Side::Antecedent;
  constexpr Side S = Side::Succedent;

  unsigned choice = static_cast<unsigned>(gen_.pick(12));
  if (choice >= 9) {
    auto p1 = proof(depth - 1), p2 = proof(depth - 1);
    const Sequent &s1 = p1->sequent, &s2 = p2->sequent;
    if (choice == 9 && !s1.succedent.empty() && !s2.succedent.empty()) {
      std::size_t i = gen_.pick(s1.succedent.size());
      std::size_t j = gen_.pick(s2.succedent.size());
      Sequent ctx = context_union(without(s1, S, {i}), without(s2, S, {j}));
      Sequent c1 = ctx, c2 = ctx, c = ctx;
      c1.succedent.push_back(s1.succedent[i]);
      c2.succedent.push_back(s2.succedent[j]);
      c.succedent.push_back(Formula::conj(s1.succedent[i], s2.succedent[j]));
      return make_node(Rule::AndR, c, {{S, c.succedent.size() - 1}},
                       {weaken_to(p1, c1), weaken_to(p2, c2)});
    }
    if (choice == 10 && !s1.antecedent.empty() && !s2.antecedent.empty()) {
      std::size_t i = gen_.pick(s1.antecedent.size());
      std::size_t j = gen_.pick(s2.antecedent.size());
      Sequent ctx = context_union(without(s1, A, {i}), without(s2, A, {j}));
      Sequent c1 = ctx, c2 = ctx, c = ctx;
      c1.antecedent.push_back(s1.antecedent[i]);
      c2.antecedent.push_back(s2.antecedent[j]);
      c.antecedent.push_back(Formula::disj(s1.antecedent[i], s2.antecedent[j]));
      return make_node(Rule::OrL, c, {{A, c.antecedent.size() - 1}},
                       {weaken_to(p1, c1), weaken_to(p2, c2)});
    }
    if (choice == 11 && !s1.succedent.empty() && !s2.antecedent.empty()) {
      std::size_t i = gen_.pick(s1.succedent.size());
      std::size_t j = gen_.pick(s2.antecedent.size());
      Sequent ctx = context_union(without(s1, S, {i}), without(s2, A, {j}));
      Sequent c1 = ctx, c2 = ctx, c = ctx;
      c1.succedent.push_back(s1.succedent[i]);
      c2.antecedent.push_back(s2.antecedent[j]);
      c.antecedent.push_back(Formula::implies(s1.succedent[i], s2.antecedent[j]));
      return make_node(Rule::ImpL, c, {{A, c.antecedent.size() - 1}},
                       {weaken_to(p1, c1), weaken_to(p2, c2)});
    }
    choice = 0;
  }

  auto p = proof(depth - 1);
  const Sequent &s = p->sequent;
  switch (choice) {
  case 1:
    if (!s.antecedent.empty() && !s.succedent.empty()) {
      std::size_t i = gen_.pick(s.antecedent.size());
      std::size_t j = gen_.pick(s.succedent.size());
      Sequent c = without(without(s, A, {i}), S, {j});
      c.succedent.push_back(Formula::implies(s.antecedent[i], s.succedent[j]));
      return unary(Rule::ImpR, p, c, S);
    }
    break;
  case 2:
    if (s.antecedent.size() >= 2) {
      std::size_t i = gen_.pick(s.antecedent.size() - 1);
      Sequent c = without(s, A, {i, i + 1});
      c.antecedent.push_back(Formula::conj(s.antecedent[i], s.antecedent[i + 1]));
      return unary(Rule::AndL, p, c, A);
    }
    break;
  case 3:
    if (s.succedent.size() >= 2) {
      std::size_t i = gen_.pick(s.succedent.size() - 1);
      Sequent c = without(s, S, {i, i + 1});
      c.succedent.push_back(Formula::disj(s.succedent[i], s.succedent[i + 1]));
      return unary(Rule::OrR, p, c, S);
    }
    break;
  case 4:
    if (!s.antecedent.empty()) {
      std::size_t i = gen_.pick(s.antecedent.size());
      Sequent c = without(s, A, {i});
      c.succedent.push_back(Formula::neg(s.antecedent[i]));
      return unary(Rule::NotR, p, c, S);
    }
    break;
  case 5:
    if (!s.succedent.empty()) {
      std::size_t i = gen_.pick(s.succedent.size());
      Sequent c = without(s, S, {i});
      c.antecedent.push_back(Formula::neg(s.succedent[i]));
      return unary(Rule::NotL, p, c, A);
    }
    break;
  case 6:
  case 7: {
    auto q = pack(p);
    const Formula &a = q->sequent.antecedent[0];
    const Formula &b = q->sequent.succedent[0];
    Sequent c{{Formula::box(a)}, {Formula::box(b)}};
    if (c_ == Calculus::GM)
      return make_node(Rule::RM, c, {{A, 0}, {S, 0}}, {q});
    if (a == b)
      return make_node(Rule::RE, c, {{A, 0}, {S, 0}}, {q, q});
    if (auto back = prove_bounded({{b}, {a}}, Calculus::GE, 6))
      return make_node(Rule::RE, c, {{A, 0}, {S, 0}}, {q, *back});
    return identity(Formula::box(gen_.coin() ? a : b));
  }
  case 8:
    // A duplicate, merged again by contraction.
    if (!s.antecedent.empty()) {
      std::size_t i = gen_.pick(s.antecedent.size());
      Sequent d = s;
      d.antecedent.push_back(s.antecedent[i]);
      auto w = unary(Rule::WL, p, d, A);
      return make_node(Rule::CL, s, {{A, i}}, {w});
    }
    break;
  default:
    break;
  }
  Sequent c = s;
  if (gen_.coin()) {
    c.antecedent.push_back(small());
    return unary(Rule::WL, p, c, A);
  }
  c.succedent.push_back(small());
  return unary(Rule::WR, p, c, S);
}

SequentProof ForwardGen::theorem(unsigned depth) { return close(proof(depth)); }

// Hilbert theorem generation.

Derivation random_theorem(Dialect d, std::uint64_t seed, unsigned steps) {
  Gen g(seed);
  auto cs = std::make_shared<const ConstantSpec>(ConstantSpec::total());
  DerivationBuilder b(d, cs);
  auto ids = scheme_ids(d);
  std::vector<std::size_t> lines;

  auto small = [&] {
    return g.pick(4) == 0 ? g.formula(d, 1) : g.prop(2, kAtoms);
  };
  auto instance = [&](const std::string &id) {
    Binding bind;
    for (const char *f : {"F", "G", "H"})
      bind.formulas[f] = small();
    for (const char *t : {"L", "K"})
      bind.terms[t] = g.proof_term(d, 2);
    for (const char *t : {"T", "S"})
      bind.terms[t] = g.just_term(d, 2);
    return instantiate(find_scheme(id)->pattern, bind);
  };

  for (unsigned i = 0; i < steps; ++i) {
    switch (lines.empty() ? 0 : g.pick(6)) {
    case 0:
    case 1: {
      const std::string &id = ids[g.pick(ids.size())];
      lines.push_back(b.axiom(id, instance(id)));
      break;
    }
    case 2: {
      const std::string &id = ids[g.pick(ids.size())];
      lines.push_back(b.an("c_" + id, instance(id)));
      break;
    }
    case 3: {
      // K lift: from A get G -> A.
      std::size_t l = lines[g.pick(lines.size())];
      Formula a = b.formula(l);
      std::size_t k = b.axiom("K", {a, small()});
      lines.push_back(b.mp(k, l));
      break;
    }
    case 4: {
      // j4 on a line of the form c:F.
      std::vector<std::size_t> boxed;
      for (auto l : lines)
        if (b.formula(l).kind() == Formula::Kind::ProofOf)
          boxed.push_back(l);
      if (boxed.empty())
        break;
      std::size_t l = boxed[g.pick(boxed.size())];
      const Formula &f = b.formula(l);
      Formula next = Formula::proof_of(Term::bang(f.term()), f);
      std::size_t ax = b.axiom("j4", Formula::implies(f, next));
      lines.push_back(b.mp(ax, l));
      break;
    }
    default: {
      // Modus ponens wherever it applies.
      bool done = false;
      for (auto maj : lines) {
        const Formula &f = b.formula(maj);
        if (f.kind() != Formula::Kind::Implies)
          continue;
        for (auto min : lines)
          if (b.formula(min) == f.left()) {
            lines.push_back(b.mp(maj, min));
            done = true;
            break;
          }
        if (done)
          break;
      }
      break;
    }
    }
  }
  return b.finish(lines.back());
}

} // namespace support
