#include "jlog/axioms.hpp"

#include "jlog/errors.hpp"
#include "jlog/syntax.hpp"

namespace jlog {

namespace {

struct SchemeText {
  const char *id;
  const char *pattern;
  bool je;
  bool jem;
};

// The basis: K, S and double negation elimination give classical
// implication with ⊥; the rest introduce and eliminate ~, & and |.
constexpr SchemeText kSchemes[] = {
    {"j", "?L:(?F -> ?G) -> (?K:?F -> (?L * ?K):?G)", true, true},
    {"jplus1", "?L:?F | ?K:?F -> (?L + ?K):?F", true, false},
    {"jt", "?L:?F -> ?F", true, true},
    {"j4", "?L:?F -> !?L:?L:?F", true, true},
    {"je", "?L:(?F -> ?G) & ?L:(?G -> ?F) -> ([e(?L)]?F -> [e(?L)]?G)", true,
     false},
    {"jeplus", "[e(?L)]?F | [e(?K)]?F -> [e(?L + ?K)]?F", true, false},
    {"jm", "?L:(?F -> ?G) -> ([?T]?F -> [m(?L, ?T)]?G)", false, true},
    {"jplus2", "[?T]?F | [?S]?F -> [?T + ?S]?F", false, true},
    {"K", "?F -> (?G -> ?F)", true, true},
    {"S", "(?F -> (?G -> ?H)) -> ((?F -> ?G) -> (?F -> ?H))", true, true},
    {"DNE", "((?F -> _|_) -> _|_) -> ?F", true, true},
    {"NOT_I", "(?F -> _|_) -> ~?F", true, true},
    {"NOT_E", "~?F -> (?F -> _|_)", true, true},
    {"AND_I", "?F -> (?G -> ?F & ?G)", true, true},
    {"AND_E1", "?F & ?G -> ?F", true, true},
    {"AND_E2", "?F & ?G -> ?G", true, true},
    {"OR_I1", "?F -> ?F | ?G", true, true},
    {"OR_I2", "?G -> ?F | ?G", true, true},
    {"OR_E", "(?F -> ?H) -> ((?G -> ?H) -> (?F | ?G -> ?H))", true, true},
};

std::vector<AxiomScheme> build_catalogue() {
  std::vector<AxiomScheme> out;
  for (const auto &s : kSchemes) {
    AxiomScheme a;
    a.id = s.id;
    a.in_je = s.je;
    a.in_jem = s.jem;
    a.propositional = s.je && s.jem && std::string_view(s.id) != "j" &&
                      std::string_view(s.id) != "jt" &&
                      std::string_view(s.id) != "j4";
    Dialect d = s.je ? Dialect::JE : Dialect::JEM;
    a.pattern = parse_formula(s.pattern, d, ParseOptions{true});
    out.push_back(std::move(a));
  }
  return out;
}

bool match_term(const Term &p, const Term &t, Binding &b) {
  using K = Term::Kind;
  if (p.kind() == K::MetaProof || p.kind() == K::MetaJust) {
    Sort want = p.kind() == K::MetaProof ? Sort::Proof : Sort::Justification;
    if (t.sort() != want)
      return false;
    auto [it, inserted] = b.terms.emplace(p.name(), t);
    return inserted || it->second == t;
  }
  if (p.kind() != t.kind())
    return false;
  switch (p.kind()) {
  case K::Constant:
    return p == t;
  case K::ProofVar:
  case K::JustVar:
    return p == t;
  case K::Bang:
  case K::E:
    return match_term(p.inner(), t.inner(), b);
  default:
    return match_term(p.left(), t.left(), b) &&
           match_term(p.right(), t.right(), b);
  }
}

} // namespace

const std::vector<AxiomScheme> &axiom_catalogue() {
  static const std::vector<AxiomScheme> catalogue = build_catalogue();
  return catalogue;
}

std::vector<std::string> scheme_ids(Dialect d) {
  std::vector<std::string> out;
  for (const auto &s : axiom_catalogue())
    if (s.belongs_to(d))
      out.push_back(s.id);
  return out;
}

const AxiomScheme *find_scheme(std::string_view id) {
  for (const auto &s : axiom_catalogue())
    if (s.id == id)
      return &s;
  return nullptr;
}

bool match_pattern(const Formula &p, const Formula &f, Binding &b) {
  using K = Formula::Kind;
  if (p.kind() == K::Meta) {
    auto [it, inserted] = b.formulas.emplace(p.name(), f);
    return inserted || it->second == f;
  }
  if (p.kind() != f.kind())
    return false;
  switch (p.kind()) {
  case K::Atom:
    return p == f;
  case K::Bottom:
    return true;
  case K::ProofOf:
  case K::JustOf:
    if (!match_term(p.term(), f.term(), b))
      return false;
    break;
  default:
    break;
  }
  for (std::size_t i = 0; i < p.child_count(); ++i)
    if (!match_pattern(p.child(i), f.child(i), b))
      return false;
  return true;
}

bool matches_scheme(const Formula &f, const AxiomScheme &scheme) {
  Binding b;
  return match_pattern(scheme.pattern, f, b);
}

std::vector<AxiomMatch> match_axiom(const Formula &f, Dialect dialect) {
  std::vector<AxiomMatch> out;
  for (const auto &s : axiom_catalogue()) {
    if (!s.belongs_to(dialect))
      continue;
    Binding b;
    if (match_pattern(s.pattern, f, b))
      out.push_back({&s, std::move(b)});
  }
  return out;
}

Term instantiate(const Term &p, const Binding &b) {
  using K = Term::Kind;
  switch (p.kind()) {
  case K::MetaProof:
  case K::MetaJust: {
    auto it = b.terms.find(p.name());
    return it == b.terms.end() ? p : it->second;
  }
  case K::App:
    return Term::app(instantiate(p.left(), b), instantiate(p.right(), b));
  case K::Sum:
    return Term::sum(instantiate(p.left(), b), instantiate(p.right(), b));
  case K::Bang:
    return Term::bang(instantiate(p.inner(), b));
  case K::E:
    return Term::e(instantiate(p.inner(), b));
  case K::JustSum:
    return Term::just_sum(instantiate(p.left(), b), instantiate(p.right(), b));
  case K::M:
    return Term::m(instantiate(p.left(), b), instantiate(p.right(), b));
  default:
    return p;
  }
}

Formula instantiate(const Formula &p, const Binding &b) {
  using K = Formula::Kind;
  switch (p.kind()) {
  case K::Meta: {
    auto it = b.formulas.find(p.name());
    return it == b.formulas.end() ? p : it->second;
  }
  case K::Atom:
  case K::Bottom:
    return p;
  case K::Implies:
    return Formula::implies(instantiate(p.left(), b), instantiate(p.right(), b));
  case K::And:
    return Formula::conj(instantiate(p.left(), b), instantiate(p.right(), b));
  case K::Or:
    return Formula::disj(instantiate(p.left(), b), instantiate(p.right(), b));
  case K::Not:
    return Formula::neg(instantiate(p.body(), b));
  case K::Box:
    return Formula::box(instantiate(p.body(), b));
  case K::ProofOf:
    return Formula::proof_of(instantiate(p.term(), b), instantiate(p.body(), b));
  case K::JustOf:
    return Formula::just_of(instantiate(p.term(), b), instantiate(p.body(), b));
  }
  return p;
}

Formula axiom_instance(std::string_view id, const std::vector<Formula> &fs) {
  const AxiomScheme *s = find_scheme(id);
  if (!s)
    throw Error("unknown axiom scheme '" + std::string(id) + "'");
  static const char *names[] = {"F", "G", "H"};
  Binding b;
  for (std::size_t i = 0; i < fs.size() && i < 3; ++i)
    b.formulas.emplace(names[i], fs[i]);
  return instantiate(s->pattern, b);
}

} // namespace jlog
