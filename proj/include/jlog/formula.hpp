#pragma once

#include "jlog/term.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace jlog {

/// Immutable, hash-consed formula of the modal language or of one of the
/// justification dialects. Structurally equal formulas share storage, so
/// `==` is a pointer comparison.
///
/// And/Or/Not are primitive connectives in every language. Box only
/// occurs in modal formulas; ProofOf (λ:F) and JustOf ([t]F) only in
/// justification formulas. Meta nodes are pattern metavariables used by
/// the axiom catalogue.
class Formula {
public:
  enum class Kind : std::uint8_t {
    Atom,
    Bottom,
    Implies,
    And,
    Or,
    Not,
    Box,
    ProofOf,
    JustOf,
    Meta,
  };

  Formula() = default;

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula implies(Formula l, Formula r);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula neg(Formula inner);
  static Formula box(Formula inner);
  static Formula proof_of(Term proof, Formula body);
  static Formula just_of(Term just, Formula body);
  static Formula meta(std::string name);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  const std::string &name() const;
  const Formula &left() const;
  const Formula &right() const;
  /// Body of Not/Box/ProofOf/JustOf.
  const Formula &body() const { return left(); }
  const Term &term() const;

  bool is_binary() const {
    auto k = kind();
    return k == Kind::Implies || k == Kind::And || k == Kind::Or;
  }
  bool is_prefix() const {
    auto k = kind();
    return k == Kind::Not || k == Kind::Box || k == Kind::ProofOf ||
           k == Kind::JustOf;
  }
  std::size_t child_count() const;
  const Formula &child(std::size_t i) const;

  std::size_t hash() const;
  unsigned depth() const;
  /// Number of Box nodes.
  unsigned box_count() const;
  bool has_proof_of() const;
  bool has_justification() const;
  bool has_provisional() const;
  /// Bit (1 << kind) for every formula kind below, and the same for terms.
  std::uint16_t kinds() const;
  std::uint16_t term_kinds() const;
  const void *identity() const { return node_.get(); }

  friend bool operator==(const Formula &a, const Formula &b) {
    return a.node_ == b.node_;
  }
  friend std::strong_ordering operator<=>(const Formula &a, const Formula &b);

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula l;
  Formula r;
  Term term;
  std::size_t hash = 0;
  unsigned depth = 0;
  unsigned boxes = 0;
  bool proof_of = false;
  bool justification = false;
  bool provisional = false;
  std::uint16_t kinds = 0;
  std::uint16_t term_kinds = 0;
};

struct FormulaHash {
  std::size_t operator()(const Formula &f) const { return f.hash(); }
};

using FormulaSet = std::set<Formula>;

/// `a <-> b`, encoded as a conjunction of the two implications.
Formula iff(const Formula &a, const Formula &b);

/// Right-associated disjunction of the list; the empty disjunction is ⊥.
Formula big_or(const std::vector<Formula> &items);

/// Validates every node and embedded term against the dialect.
/// Throws DialectError.
void validate(const Formula &f, Dialect dialect);
void validate(const Term &t, Dialect dialect);
bool conforms(const Formula &f, Dialect dialect);

/// Every atom name occurring in f.
std::set<std::string> atoms_of(const Formula &f);

} // namespace jlog
