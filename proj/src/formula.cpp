#include "jlog/formula.hpp"

#include "jlog/errors.hpp"

#include <cassert>
#include <mutex>
#include <unordered_map>

namespace jlog {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Formula Formula::make(Node n) {
  std::size_t h = mix(0x2545f4914f6cdd1dULL, static_cast<std::size_t>(n.kind));
  h = mix(h, std::hash<std::string>{}(n.name));
  unsigned depth = 0;
  unsigned boxes = n.kind == Kind::Box ? 1 : 0;
  bool proof_of = n.kind == Kind::ProofOf;
  bool just = n.kind == Kind::ProofOf || n.kind == Kind::JustOf;
  bool prov = n.term.valid() && n.term.has_provisional();
  std::uint16_t kinds = 1u << static_cast<unsigned>(n.kind);
  std::uint16_t tkinds = n.term.kinds();
  if (n.term.valid())
    h = mix(h, n.term.hash());
  for (const Formula *c : {&n.l, &n.r}) {
    if (!c->valid())
      continue;
    h = mix(h, c->hash());
    depth = std::max(depth, c->depth() + 1);
    boxes += c->box_count();
    proof_of = proof_of || c->has_proof_of();
    just = just || c->has_justification();
    prov = prov || c->has_provisional();
    kinds |= c->kinds();
    tkinds |= c->term_kinds();
  }
  n.kinds = kinds;
  n.term_kinds = tkinds;
  n.hash = h;
  n.depth = depth;
  n.boxes = boxes;
  n.proof_of = proof_of;
  n.justification = just;
  n.provisional = prov;

  static std::mutex mutex;
  static std::unordered_multimap<std::size_t, std::weak_ptr<const Node>> table;
  static std::size_t sweep_at = 1 << 16;
  std::lock_guard lock(mutex);
  auto range = table.equal_range(h);
  for (auto it = range.first; it != range.second; ++it) {
    auto existing = it->second.lock();
    if (!existing)
      continue;
    const Node &x = *existing;
    if (x.kind == n.kind && x.name == n.name && x.l == n.l && x.r == n.r &&
        x.term == n.term)
      return Formula(std::move(existing));
  }
  auto node = std::make_shared<const Node>(std::move(n));
  table.emplace(h, node);
  if (table.size() > sweep_at) {
    for (auto it = table.begin(); it != table.end();)
      it = it->second.expired() ? table.erase(it) : std::next(it);
    sweep_at = std::max<std::size_t>(1 << 16, 2 * table.size());
  }
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  return make(Node{Kind::Atom, std::move(name)});
}

Formula Formula::bottom() { return make(Node{Kind::Bottom, {}}); }

Formula Formula::implies(Formula l, Formula r) {
  Node n{Kind::Implies, {}};
  n.l = std::move(l);
  n.r = std::move(r);
  return make(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) {
  Node n{Kind::And, {}};
  n.l = std::move(l);
  n.r = std::move(r);
  return make(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) {
  Node n{Kind::Or, {}};
  n.l = std::move(l);
  n.r = std::move(r);
  return make(std::move(n));
}

Formula Formula::neg(Formula inner) {
  Node n{Kind::Not, {}};
  n.l = std::move(inner);
  return make(std::move(n));
}

Formula Formula::box(Formula inner) {
  Node n{Kind::Box, {}};
  n.l = std::move(inner);
  return make(std::move(n));
}

Formula Formula::proof_of(Term proof, Formula body) {
  assert(proof.sort() == Sort::Proof);
  Node n{Kind::ProofOf, {}};
  n.l = std::move(body);
  n.term = std::move(proof);
  return make(std::move(n));
}

Formula Formula::just_of(Term just, Formula body) {
  assert(just.sort() == Sort::Justification);
  Node n{Kind::JustOf, {}};
  n.l = std::move(body);
  n.term = std::move(just);
  return make(std::move(n));
}

Formula Formula::meta(std::string name) {
  return make(Node{Kind::Meta, std::move(name)});
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string &Formula::name() const { return node_->name; }
const Formula &Formula::left() const { return node_->l; }
const Formula &Formula::right() const { return node_->r; }
const Term &Formula::term() const { return node_->term; }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }
unsigned Formula::depth() const { return node_->depth; }
unsigned Formula::box_count() const { return node_->boxes; }
bool Formula::has_proof_of() const { return node_->proof_of; }
bool Formula::has_justification() const { return node_->justification; }
bool Formula::has_provisional() const { return node_->provisional; }
std::uint16_t Formula::kinds() const { return node_->kinds; }
std::uint16_t Formula::term_kinds() const { return node_->term_kinds; }

std::size_t Formula::child_count() const {
  if (is_binary())
    return 2;
  if (is_prefix())
    return 1;
  return 0;
}

const Formula &Formula::child(std::size_t i) const {
  return i == 0 ? node_->l : node_->r;
}

std::strong_ordering operator<=>(const Formula &a, const Formula &b) {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  if (!a.node_)
    return std::strong_ordering::less;
  if (!b.node_)
    return std::strong_ordering::greater;
  const auto &x = *a.node_;
  const auto &y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0)
    return c;
  if (auto c = x.name.compare(y.name); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = x.term <=> y.term; c != 0)
    return c;
  if (auto c = x.l <=> y.l; c != 0)
    return c;
  return x.r <=> y.r;
}

Formula iff(const Formula &a, const Formula &b) {
  return Formula::conj(Formula::implies(a, b), Formula::implies(b, a));
}

Formula big_or(const std::vector<Formula> &items) {
  if (items.empty())
    return Formula::bottom();
  Formula acc = items.back();
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it)
    acc = Formula::disj(*it, acc);
  return acc;
}

namespace {

constexpr std::uint16_t bit(Term::Kind k) {
  return std::uint16_t(1u << static_cast<unsigned>(k));
}
constexpr std::uint16_t bit(Formula::Kind k) {
  return std::uint16_t(1u << static_cast<unsigned>(k));
}

std::uint16_t banned_terms(Dialect d) {
  using K = Term::Kind;
  std::uint16_t je = bit(K::Sum) | bit(K::E);
  std::uint16_t jem = bit(K::JustVar) | bit(K::JustSum) | bit(K::M);
  switch (d) {
  case Dialect::JE:
    return jem;
  case Dialect::JEM:
    return je;
  default:
    return je | jem;
  }
}

std::uint16_t banned_formulas(Dialect d) {
  using K = Formula::Kind;
  if (d == Dialect::Modal)
    return bit(K::ProofOf) | bit(K::JustOf);
  return bit(K::Box);
}

} // namespace

void validate(const Term &t, Dialect dialect) {
  using K = Term::Kind;
  if (!(t.kinds() & banned_terms(dialect)))
    return;
  switch (t.kind()) {
  case K::Constant:
  case K::ProofVar:
  case K::MetaProof:
  case K::MetaJust:
    break;
  case K::App:
    validate(t.left(), dialect);
    validate(t.right(), dialect);
    break;
  case K::Sum:
    if (dialect != Dialect::JE)
      throw DialectError("'+' on proof terms is only available in JE");
    validate(t.left(), dialect);
    validate(t.right(), dialect);
    break;
  case K::Bang:
    validate(t.inner(), dialect);
    break;
  case K::E:
    if (dialect != Dialect::JE)
      throw DialectError("e(...) is only available in JE");
    validate(t.inner(), dialect);
    break;
  case K::JustVar:
    if (dialect != Dialect::JEM)
      throw DialectError("justification variables are only available in JEM");
    break;
  case K::JustSum:
    if (dialect != Dialect::JEM)
      throw DialectError("'+' on justification terms is only available in JEM");
    validate(t.left(), dialect);
    validate(t.right(), dialect);
    break;
  case K::M:
    if (dialect != Dialect::JEM)
      throw DialectError("m(...) is only available in JEM");
    validate(t.left(), dialect);
    validate(t.right(), dialect);
    break;
  }
}

void validate(const Formula &f, Dialect dialect) {
  using K = Formula::Kind;
  if (!(f.kinds() & banned_formulas(dialect)) &&
      !(f.term_kinds() & banned_terms(dialect)))
    return;
  switch (f.kind()) {
  case K::Atom:
  case K::Bottom:
  case K::Meta:
    return;
  case K::Box:
    if (dialect != Dialect::Modal)
      throw DialectError("'[]' is only available in the modal language");
    break;
  case K::ProofOf:
  case K::JustOf:
    if (dialect == Dialect::Modal)
      throw DialectError("terms are not part of the modal language");
    validate(f.term(), dialect);
    break;
  default:
    break;
  }
  for (std::size_t i = 0; i < f.child_count(); ++i)
    validate(f.child(i), dialect);
}

bool conforms(const Formula &f, Dialect dialect) {
  try {
    validate(f, dialect);
    return true;
  } catch (const DialectError &) {
    return false;
  }
}

namespace {

void collect_atoms(const Formula &f, std::set<std::string> &out) {
  if (f.kind() == Formula::Kind::Atom)
    out.insert(f.name());
  for (std::size_t i = 0; i < f.child_count(); ++i)
    collect_atoms(f.child(i), out);
}

} // namespace

std::set<std::string> atoms_of(const Formula &f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

} // namespace jlog
