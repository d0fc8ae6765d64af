#include "jlog/term.hpp"

#include "jlog/errors.hpp"

#include <cassert>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace jlog {

const char *dialect_name(Dialect d) {
  switch (d) {
  case Dialect::JE:
    return "JE";
  case Dialect::JEM:
    return "JEM";
  case Dialect::Modal:
    return "MODAL";
  }
  return "?";
}

Dialect dialect_from_string(const std::string &s) {
  if (s == "JE")
    return Dialect::JE;
  if (s == "JEM")
    return Dialect::JEM;
  if (s == "MODAL" || s == "Modal" || s == "modal")
    return Dialect::Modal;
  throw FormatError("unknown dialect '" + s + "'");
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Term Term::make(Node n) {
  std::size_t h = mix(0x51ed270b27b1f3a5ULL, static_cast<std::size_t>(n.kind));
  h = mix(h, std::hash<std::string>{}(n.name));
  h = mix(h, n.index);
  h = mix(h, n.provisional ? 1 : 0);
  unsigned depth = 0;
  bool vars = n.kind == Kind::ProofVar || n.kind == Kind::JustVar ||
              n.kind == Kind::MetaProof || n.kind == Kind::MetaJust;
  bool prov = (n.kind == Kind::ProofVar || n.kind == Kind::JustVar) &&
              n.provisional;
  std::uint16_t kinds = 1u << static_cast<unsigned>(n.kind);
  for (const Term *c : {&n.a, &n.b}) {
    if (!c->valid())
      continue;
    h = mix(h, c->hash());
    depth = std::max(depth, c->depth());
    vars = vars || c->has_vars();
    prov = prov || c->has_provisional();
    kinds |= c->kinds();
  }
  n.hash = h;
  n.kinds = kinds;
  n.depth = depth + 1;
  n.has_vars = vars;
  n.has_provisional = prov;

  // Hash-consing: structurally equal terms share one node, so equality is
  // pointer identity. Children are already interned.
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
    if (x.kind == n.kind && x.index == n.index &&
        x.provisional == n.provisional && x.name == n.name &&
        x.a.node_ == n.a.node_ && x.b.node_ == n.b.node_)
      return Term(std::move(existing));
  }
  auto node = std::make_shared<const Node>(std::move(n));
  table.emplace(h, node);
  if (table.size() > sweep_at) {
    for (auto it = table.begin(); it != table.end();)
      it = it->second.expired() ? table.erase(it) : std::next(it);
    sweep_at = std::max<std::size_t>(1 << 16, 2 * table.size());
  }
  return Term(std::move(node));
}

Term Term::constant(std::string name) {
  Node n{Kind::Constant, std::move(name)};
  return make(std::move(n));
}

Term Term::proof_var(unsigned index, bool provisional) {
  Node n{Kind::ProofVar, {}};
  n.index = index;
  n.provisional = provisional;
  return make(std::move(n));
}

Term Term::app(Term left, Term right) {
  assert(left.sort() == Sort::Proof && right.sort() == Sort::Proof);
  Node n{Kind::App, {}};
  n.a = std::move(left);
  n.b = std::move(right);
  return make(std::move(n));
}

Term Term::sum(Term left, Term right) {
  assert(left.sort() == Sort::Proof && right.sort() == Sort::Proof);
  Node n{Kind::Sum, {}};
  n.a = std::move(left);
  n.b = std::move(right);
  return make(std::move(n));
}

Term Term::bang(Term inner) {
  assert(inner.sort() == Sort::Proof);
  Node n{Kind::Bang, {}};
  n.a = std::move(inner);
  return make(std::move(n));
}

Term Term::e(Term proof) {
  assert(proof.sort() == Sort::Proof);
  Node n{Kind::E, {}};
  n.a = std::move(proof);
  return make(std::move(n));
}

Term Term::just_var(unsigned index, bool provisional) {
  Node n{Kind::JustVar, {}};
  n.index = index;
  n.provisional = provisional;
  return make(std::move(n));
}

Term Term::just_sum(Term left, Term right) {
  assert(left.sort() == Sort::Justification &&
         right.sort() == Sort::Justification);
  Node n{Kind::JustSum, {}};
  n.a = std::move(left);
  n.b = std::move(right);
  return make(std::move(n));
}

Term Term::m(Term proof, Term just) {
  assert(proof.sort() == Sort::Proof && just.sort() == Sort::Justification);
  Node n{Kind::M, {}};
  n.a = std::move(proof);
  n.b = std::move(just);
  return make(std::move(n));
}

Term Term::meta(Sort sort, std::string name) {
  Node n{sort == Sort::Proof ? Kind::MetaProof : Kind::MetaJust,
         std::move(name)};
  return make(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

Sort Term::sort() const {
  switch (node_->kind) {
  case Kind::Constant:
  case Kind::ProofVar:
  case Kind::App:
  case Kind::Sum:
  case Kind::Bang:
  case Kind::MetaProof:
    return Sort::Proof;
  default:
    return Sort::Justification;
  }
}

const std::string &Term::name() const { return node_->name; }
unsigned Term::index() const { return node_->index; }
bool Term::provisional() const { return node_->provisional; }
const Term &Term::left() const { return node_->a; }
const Term &Term::right() const { return node_->b; }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }
unsigned Term::depth() const { return node_ ? node_->depth : 0; }
bool Term::has_vars() const { return node_ && node_->has_vars; }
bool Term::has_provisional() const { return node_ && node_->has_provisional; }
std::uint16_t Term::kinds() const { return node_ ? node_->kinds : 0; }

bool operator==(const Term &a, const Term &b) { return a.node_ == b.node_; }

std::strong_ordering operator<=>(const Term &a, const Term &b) {
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
  if (auto c = x.index <=> y.index; c != 0)
    return c;
  if (auto c = x.provisional <=> y.provisional; c != 0)
    return c;
  if (auto c = x.name.compare(y.name); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = x.a <=> y.a; c != 0)
    return c;
  return x.b <=> y.b;
}

} // namespace jlog
