#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

namespace jlog {

enum class Dialect { JE, JEM, Modal };

const char *dialect_name(Dialect d);
Dialect dialect_from_string(const std::string &s);

/// The two term sorts of the justification languages.
enum class Sort { Proof, Justification };

/// Immutable, structurally shared proof term or justification term.
///
/// Proof terms: constants, proof variables, application (λ·κ), sum (λ+κ)
/// and proof checker (!λ). Justification terms: e(λ) for JE; variables,
/// sums and m(λ, t) for JEM. Pattern metavariables of either sort are only
/// used by the axiom catalogue.
class Term {
public:
  enum class Kind : std::uint8_t {
    Constant,
    ProofVar,
    App,
    Sum,
    Bang,
    E,
    JustVar,
    JustSum,
    M,
    MetaProof,
    MetaJust,
  };

  Term() = default;

  static Term constant(std::string name);
  static Term proof_var(unsigned index, bool provisional = false);
  static Term app(Term left, Term right);
  static Term sum(Term left, Term right);
  static Term bang(Term inner);
  static Term e(Term proof);
  static Term just_var(unsigned index, bool provisional = false);
  static Term just_sum(Term left, Term right);
  static Term m(Term proof, Term just);
  static Term meta(Sort sort, std::string name);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  Sort sort() const;
  const std::string &name() const;
  unsigned index() const;
  bool provisional() const;
  /// Left child of App/Sum/JustSum, the proof argument of M, inner of Bang/E.
  const Term &left() const;
  /// Right child of App/Sum/JustSum, the justification argument of M.
  const Term &right() const;
  const Term &inner() const { return left(); }

  std::size_t hash() const;
  unsigned depth() const;
  /// True if a (proof or justification) variable or metavariable occurs.
  bool has_vars() const;
  bool has_provisional() const;
  /// Bit (1 << kind) set for every kind occurring in the term.
  std::uint16_t kinds() const;
  bool is_variable() const {
    return kind() == Kind::ProofVar || kind() == Kind::JustVar;
  }
  const void *identity() const { return node_.get(); }

  friend bool operator==(const Term &a, const Term &b);
  friend std::strong_ordering operator<=>(const Term &a, const Term &b);

private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Node n);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::string name;
  unsigned index = 0;
  bool provisional = false;
  Term a;
  Term b;
  std::size_t hash = 0;
  unsigned depth = 1;
  bool has_vars = false;
  bool has_provisional = false;
  std::uint16_t kinds = 0;
};

struct TermHash {
  std::size_t operator()(const Term &t) const { return t.hash(); }
};

} // namespace jlog
