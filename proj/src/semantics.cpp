#include "jlog/semantics.hpp"

#include "jlog/axioms.hpp"
#include "jlog/errors.hpp"
#include "jlog/syntax.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace jlog {

namespace {

const FormulaSet &empty_set() {
  static const FormulaSet s;
  return s;
}

void add_subterms(const Term &t, std::set<Term> &out) {
  if (!out.insert(t).second)
    return;
  if (t.left().valid())
    add_subterms(t.left(), out);
  if (t.right().valid())
    add_subterms(t.right(), out);
}

bool is_leaf(const Term &t) {
  switch (t.kind()) {
  case Term::Kind::Constant:
  case Term::Kind::ProofVar:
  case Term::Kind::JustVar:
    return true;
  default:
    return false;
  }
}

void collect_metas(const Term &t, std::set<std::string> &proof,
                   std::set<std::string> &just) {
  if (t.kind() == Term::Kind::MetaProof)
    proof.insert(t.name());
  else if (t.kind() == Term::Kind::MetaJust)
    just.insert(t.name());
  if (t.left().valid())
    collect_metas(t.left(), proof, just);
  if (t.right().valid())
    collect_metas(t.right(), proof, just);
}

void collect_metas(const Formula &f, std::set<std::string> &formulas,
                   std::set<std::string> &proof, std::set<std::string> &just) {
  if (f.kind() == Formula::Kind::Meta)
    formulas.insert(f.name());
  if (f.kind() == Formula::Kind::ProofOf || f.kind() == Formula::Kind::JustOf)
    collect_metas(f.term(), proof, just);
  for (std::size_t i = 0; i < f.child_count(); ++i)
    collect_metas(f.child(i), formulas, proof, just);
}

// Instances of the schemes assigned to `constant`, with formula metas over
// the pool and term metas over the given leaves.
FormulaSet cs_instances(const ConstantSpec &cs, const std::string &constant,
                        Dialect dialect, const std::vector<Formula> &pool,
                        const std::vector<Term> &proof_leaves,
                        const std::vector<Term> &just_leaves,
                        unsigned max_depth) {
  FormulaSet out;
  auto it = cs.assignment.find(constant);
  if (it == cs.assignment.end() || pool.empty())
    return out;
  for (const auto &id : it->second) {
    const AxiomScheme *scheme = find_scheme(id);
    if (!scheme || !scheme->belongs_to(dialect))
      continue;
    std::set<std::string> fm, pm, jm;
    collect_metas(scheme->pattern, fm, pm, jm);
    std::vector<std::string> fv(fm.begin(), fm.end()), pv(pm.begin(), pm.end()),
        jv(jm.begin(), jm.end());
    if ((!pv.empty() && proof_leaves.empty()) ||
        (!jv.empty() && just_leaves.empty()))
      continue;
    Binding b;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      std::size_t nf = fv.size(), np = pv.size();
      if (i == nf + np + jv.size()) {
        Formula f = instantiate(scheme->pattern, b);
        if (f.depth() <= max_depth)
          out.insert(f);
        return;
      }
      if (i < nf) {
        for (const auto &g : pool) {
          b.formulas[fv[i]] = g;
          go(i + 1);
        }
      } else if (i < nf + np) {
        for (const auto &t : proof_leaves) {
          b.terms[pv[i - nf]] = t;
          go(i + 1);
        }
      } else {
        for (const auto &t : just_leaves) {
          b.terms[jv[i - nf - np]] = t;
          go(i + 1);
        }
      }
    };
    go(0);
  }
  return out;
}

std::string show(const FormulaSet &s) {
  std::string out = "{";
  bool first = true;
  for (const auto &f : s) {
    if (!first)
      out += ", ";
    first = false;
    out += print_formula(f);
  }
  return out + "}";
}

FormulaSet unite(FormulaSet a, const FormulaSet &b) {
  a.insert(b.begin(), b.end());
  return a;
}

struct Leaves {
  std::vector<Term> proof;
  std::vector<Term> just;
};

Leaves leaves_of(const std::set<Term> &universe) {
  Leaves l;
  for (const auto &t : universe) {
    if (!is_leaf(t))
      continue;
    (t.sort() == Sort::Proof ? l.proof : l.just).push_back(t);
  }
  return l;
}

bool is_proof_term(const Term &t) { return t.sort() == Sort::Proof; }

} // namespace

const FormulaSet &FiniteBasicEvaluation::at(const Term &t) const {
  auto it = table.find(t);
  return it == table.end() ? empty_set() : it->second;
}

std::set<Term> FiniteBasicEvaluation::universe() const {
  std::set<Term> out;
  for (const auto &[t, _] : table)
    add_subterms(t, out);
  return out;
}

FormulaSet dot(const FormulaSet &x, const FormulaSet &y) {
  FormulaSet out;
  for (const auto &f : x)
    if (f.kind() == Formula::Kind::Implies && y.count(f.left()))
      out.insert(f.right());
  return out;
}

FormulaSet circle(const FormulaSet &x, const FormulaSet &y) {
  FormulaSet out;
  for (const auto &f : x) {
    if (f.kind() != Formula::Kind::Implies || !y.count(f.right()))
      continue;
    if (x.count(Formula::implies(f.right(), f.left())))
      out.insert(f.left());
  }
  return out;
}

FormulaSet prefix(const Term &lambda, const FormulaSet &x) {
  FormulaSet out;
  for (const auto &f : x)
    out.insert(Formula::proof_of(lambda, f));
  return out;
}

Saturation saturate(const FiniteBasicEvaluation &e, const ConstantSpec &cs,
                    const SaturationOptions &options) {
  const Dialect d = e.dialect;
  Leaves leaves = leaves_of(e.universe());
  unsigned bound = options.bound;
  for (const auto &[t, _] : e.table)
    bound = std::max(bound, t.depth());

  std::unordered_map<Term, FormulaSet, TermHash> val;
  auto get = [&](const Term &t) -> const FormulaSet & {
    auto it = val.find(t);
    return it == val.end() ? empty_set() : it->second;
  };
  auto seed = [&](const Term &t) {
    FormulaSet s = e.at(t);
    if (t.kind() == Term::Kind::Constant) {
      FormulaSet inst = cs_instances(cs, t.name(), d, options.pool,
                                     leaves.proof, leaves.just,
                                     options.cs_depth);
      s.insert(inst.begin(), inst.end());
    }
    return s;
  };

  // Terms by exact depth; each is computed from strictly smaller ones, so
  // one pass in depth order reaches the least fixed point.
  std::vector<std::vector<Term>> proof(bound + 1), just(bound + 1);
  proof[1] = leaves.proof;
  if (d == Dialect::JEM)
    just[1] = leaves.just;
  auto settle = [&](const Term &t, FormulaSet s) {
    if (!s.empty())
      val[t] = std::move(s);
  };
  for (const auto &t : proof[1])
    settle(t, seed(t));
  for (const auto &t : just[1])
    settle(t, seed(t));

  auto pairs = [&](const std::vector<std::vector<Term>> &a,
                   const std::vector<std::vector<Term>> &b, unsigned depth,
                   auto &&f) {
    // All (x, y) whose larger depth is exactly depth - 1.
    for (unsigned i = 1; i < depth; ++i)
      for (unsigned j = 1; j < depth; ++j) {
        if (std::max(i, j) != depth - 1)
          continue;
        for (const auto &x : a[i])
          for (const auto &y : b[j])
            f(x, y);
      }
  };

  for (unsigned k = 2; k <= bound; ++k) {
    pairs(proof, proof, k, [&](const Term &a, const Term &b) {
      Term t = Term::app(a, b);
      proof[k].push_back(t);
      settle(t, unite(seed(t), dot(get(a), get(b))));
      if (d == Dialect::JE) {
        Term s = Term::sum(a, b);
        proof[k].push_back(s);
        settle(s, unite(seed(s), unite(get(a), get(b))));
      }
    });
    for (const auto &a : proof[k - 1]) {
      Term t = Term::bang(a);
      proof[k].push_back(t);
      settle(t, unite(seed(t), prefix(a, get(a))));
    }
    if (d == Dialect::JE) {
      for (const auto &a : proof[k - 1]) {
        Term t = Term::e(a);
        just[k].push_back(t);
        FormulaSet x = seed(t);
        if (a.kind() == Term::Kind::Sum) {
          x = unite(x, get(Term::e(a.left())));
          x = unite(x, get(Term::e(a.right())));
        }
        const FormulaSet &base = get(a);
        for (;;) {
          std::size_t before = x.size();
          x = unite(x, circle(base, x));
          if (x.size() == before)
            break;
        }
        settle(t, std::move(x));
      }
    } else {
      pairs(proof, just, k, [&](const Term &a, const Term &b) {
        Term t = Term::m(a, b);
        just[k].push_back(t);
        settle(t, unite(seed(t), dot(get(a), get(b))));
      });
      pairs(just, just, k, [&](const Term &a, const Term &b) {
        Term t = Term::just_sum(a, b);
        just[k].push_back(t);
        settle(t, unite(seed(t), unite(get(a), get(b))));
      });
    }
  }

  Saturation out;
  out.evaluation.dialect = d;
  out.evaluation.true_atoms = e.true_atoms;
  out.evaluation.table = e.table;
  for (auto &[t, s] : val) {
    out.evaluation.table[t].insert(s.begin(), s.end());
    if (t.depth() == bound)
      out.bound_exhausted = true;
  }
  return out;
}

bool eval_basic(const FiniteBasicEvaluation &e, const Formula &f) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::Bottom:
    return false;
  case K::Atom:
    return e.true_atoms.count(f.name()) > 0;
  case K::Implies:
    return !eval_basic(e, f.left()) || eval_basic(e, f.right());
  case K::And:
    return eval_basic(e, f.left()) && eval_basic(e, f.right());
  case K::Or:
    return eval_basic(e, f.left()) || eval_basic(e, f.right());
  case K::Not:
    return !eval_basic(e, f.body());
  case K::ProofOf:
  case K::JustOf:
    return e.at(f.term()).count(f.body()) > 0;
  case K::Box:
    throw DialectError("basic evaluations do not interpret []");
  case K::Meta:
    break;
  }
  throw Error("cannot evaluate a metavariable");
}

std::vector<Violation> check_basic_model(const FiniteBasicEvaluation &e,
                                         const ConstantSpec &cs,
                                         const SaturationOptions &options) {
  std::vector<Violation> out;
  const Dialect d = e.dialect;
  std::set<Term> universe = e.universe();
  Leaves leaves = leaves_of(universe);
  auto need = [&](const char *cond, const Term &t, const FormulaSet &req) {
    FormulaSet missing;
    const FormulaSet &have = e.at(t);
    for (const auto &f : req)
      if (!have.count(f))
        missing.insert(f);
    if (!missing.empty())
      out.push_back({cond, print_term(t) + " lacks " + show(missing)});
  };
  using K = Term::Kind;
  for (const auto &t : universe) {
    switch (t.kind()) {
    case K::App:
      need("app", t, dot(e.at(t.left()), e.at(t.right())));
      break;
    case K::Sum:
      need("sum", t, unite(e.at(t.left()), e.at(t.right())));
      break;
    case K::Bang:
      need("bang", t, prefix(t.inner(), e.at(t.inner())));
      break;
    case K::E: {
      need("e-circle", t, circle(e.at(t.inner()), e.at(t)));
      if (t.inner().kind() == K::Sum)
        need("e-sum", t,
             unite(e.at(Term::e(t.inner().left())),
                   e.at(Term::e(t.inner().right()))));
      break;
    }
    case K::M:
      need("m", t, dot(e.at(t.left()), e.at(t.right())));
      break;
    case K::JustSum:
      need("jsum", t, unite(e.at(t.left()), e.at(t.right())));
      break;
    case K::Constant:
      need("cs", t,
           cs_instances(cs, t.name(), d, options.pool, leaves.proof,
                        leaves.just, options.cs_depth));
      break;
    default:
      break;
    }
  }
  for (const auto &[t, fs] : e.table) {
    if (!is_proof_term(t))
      continue;
    for (const auto &f : fs)
      if (!eval_basic(e, f))
        out.push_back({"factivity", print_formula(Formula::proof_of(t, f)) +
                                        " holds but " + print_formula(f) +
                                        " does not"});
  }
  return out;
}

bool model_truth(const QuasiModel &m, std::size_t w, const Formula &f) {
  if (w >= m.worlds || w >= m.evaluations.size())
    throw UnknownWorld("no world " + std::to_string(w));
  const FiniteBasicEvaluation &e = m.evaluations[w];
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::Bottom:
    return false;
  case K::Atom:
    return e.true_atoms.count(f.name()) > 0;
  case K::Implies:
    return !model_truth(m, w, f.left()) || model_truth(m, w, f.right());
  case K::And:
    return model_truth(m, w, f.left()) && model_truth(m, w, f.right());
  case K::Or:
    return model_truth(m, w, f.left()) || model_truth(m, w, f.right());
  case K::Not:
    return !model_truth(m, w, f.body());
  case K::ProofOf:
  case K::JustOf:
    return e.at(f.term()).count(f.body()) > 0;
  case K::Box:
    throw DialectError("quasi-models do not interpret []");
  case K::Meta:
    break;
  }
  throw Error("cannot evaluate a metavariable");
}

WorldSet truth_set(const QuasiModel &m, const Formula &f) {
  WorldSet s = 0;
  for (std::size_t w = 0; w < m.worlds; ++w)
    if (model_truth(m, w, f))
      s |= WorldSet{1} << w;
  return s;
}

std::vector<Violation> check_modular(const QuasiModel &m, Dialect dialect,
                                     const ConstantSpec &cs,
                                     const SaturationOptions &options) {
  std::vector<Violation> out;
  if (m.worlds == 0 || m.worlds > 64 || m.evaluations.size() != m.worlds ||
      m.neighborhoods.size() != m.worlds) {
    out.push_back({"shape", "worlds, neighborhoods and evaluations disagree"});
    return out;
  }
  const WorldSet all =
      m.worlds == 64 ? ~WorldSet{0} : (WorldSet{1} << m.worlds) - 1;
  for (std::size_t w = 0; w < m.worlds; ++w) {
    std::string at = "w" + std::to_string(w) + ": ";
    const FiniteBasicEvaluation &e = m.evaluations[w];
    if (e.dialect != dialect)
      out.push_back({"dialect", at + "evaluation is for " +
                                    dialect_name(e.dialect)});
    for (auto v : check_basic_model(e, cs, options)) {
      v.detail = at + v.detail;
      out.push_back(std::move(v));
    }
    for (const auto &[t, fs] : e.table) {
      if (is_proof_term(t))
        continue;
      for (const auto &f : fs)
        if (!m.neighborhoods[w].count(truth_set(m, f)))
          out.push_back({"JYB", at + print_formula(Formula::just_of(t, f)) +
                                    " but |" + print_formula(f) +
                                    "| is not a neighborhood"});
    }
    for (WorldSet x : m.neighborhoods[w])
      if (x & ~all)
        out.push_back({"shape", at + "neighborhood mentions unknown worlds"});
    if (dialect == Dialect::JEM)
      for (WorldSet x : m.neighborhoods[w])
        for (std::size_t v = 0; v < m.worlds; ++v) {
          WorldSet y = x | (WorldSet{1} << v);
          if (!m.neighborhoods[w].count(y))
            out.push_back({"monotonicity", at + "superset " +
                                               std::to_string(y) + " of " +
                                               std::to_string(x) +
                                               " is missing"});
        }
  }
  return out;
}

std::vector<MissingWitness>
check_fully_explanatory(const QuasiModel &m,
                        const std::vector<Formula> &formulas) {
  std::vector<MissingWitness> out;
  for (std::size_t w = 0; w < m.worlds; ++w)
    for (const auto &f : formulas) {
      if (!m.neighborhoods[w].count(truth_set(m, f)))
        continue;
      bool found = false;
      for (const auto &[t, fs] : m.evaluations[w].table)
        if (!is_proof_term(t) && fs.count(f)) {
          found = true;
          break;
        }
      if (!found)
        out.push_back({w, f});
    }
  return out;
}

std::vector<std::set<WorldSet>>
monotone_closure(const std::vector<std::set<WorldSet>> &n, std::size_t worlds) {
  std::vector<std::set<WorldSet>> out(n.size());
  for (std::size_t w = 0; w < n.size(); ++w) {
    std::vector<WorldSet> todo(n[w].begin(), n[w].end());
    while (!todo.empty()) {
      WorldSet x = todo.back();
      todo.pop_back();
      if (!out[w].insert(x).second)
        continue;
      for (std::size_t v = 0; v < worlds; ++v)
        if (!(x >> v & 1))
          todo.push_back(x | (WorldSet{1} << v));
    }
  }
  return out;
}

QuasiModel build_singleton_model(const FiniteBasicEvaluation &e,
                                 const ConstantSpec &cs,
                                 const SaturationOptions &options) {
  auto violations = check_basic_model(e, cs, options);
  if (!violations.empty())
    throw NotBasicModel(violations.front().condition + ": " +
                        violations.front().detail);
  QuasiModel m;
  m.worlds = 1;
  m.evaluations = {e};
  m.neighborhoods.resize(1);
  for (const auto &[t, fs] : e.table)
    if (!is_proof_term(t))
      for (const auto &f : fs)
        m.neighborhoods[0].insert(eval_basic(e, f) ? 1 : 0);
  // Monotonic models need N closed under supersets; JYB survives.
  if (e.dialect == Dialect::JEM)
    m.neighborhoods = monotone_closure(m.neighborhoods, 1);
  return m;
}

} // namespace jlog
