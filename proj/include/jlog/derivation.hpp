#pragma once

#include "jlog/constant_spec.hpp"
#include "jlog/formula.hpp"

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace jlog {

/// One line of a Hilbert derivation. MP refers to earlier lines only, so
/// a derivation is a DAG and lines may be shared.
struct Step {
  enum class Kind : std::uint8_t { Hyp, Axiom, AN, MP };

  Kind kind = Kind::Hyp;
  Formula formula;
  /// Axiom: the scheme id.
  std::string scheme;
  /// MP: index of the implication and of its antecedent.
  std::size_t major = 0;
  std::size_t minor = 0;

  friend bool operator==(const Step &, const Step &) = default;
};

const char *step_kind_name(Step::Kind k);

struct Derivation {
  Dialect dialect = Dialect::JE;
  std::shared_ptr<const ConstantSpec> cs;
  std::vector<Step> steps;
  std::size_t conclusion = 0;

  const Formula &conclusion_formula() const {
    return steps.at(conclusion).formula;
  }
  FormulaSet hypotheses() const;
};

bool operator==(const Derivation &a, const Derivation &b);

/// Δ ⊢ A.
struct Judgment {
  FormulaSet hypotheses;
  Formula conclusion;

  friend bool operator==(const Judgment &, const Judgment &) = default;
};

/// Validates every step. Throws DerivationError.
Judgment check_derivation(const Derivation &d);

/// Appends steps with deduplication: asking for a formula that is already
/// established returns the existing line. A hypothesis is replaced by a
/// real proof of the same formula as soon as one is added.
class DerivationBuilder {
public:
  DerivationBuilder(Dialect dialect, std::shared_ptr<const ConstantSpec> cs);

  std::size_t hyp(const Formula &f);
  std::size_t axiom(const std::string &scheme, const Formula &f);
  /// Instance of a scheme with formula metavariables only (F, G, H).
  std::size_t axiom(const std::string &scheme,
                    std::initializer_list<Formula> fs);
  /// AN for `constant:body`.
  std::size_t an(const std::string &constant, const Formula &body);
  std::size_t mp(std::size_t major, std::size_t minor);

  /// Copies d into this builder. Hypotheses of d that are already
  /// established here are resolved to the existing lines. Returns the line
  /// of d's conclusion.
  std::size_t import(const Derivation &d);

  /// Line establishing f without a hypothesis, if any.
  std::optional<std::size_t> proved(const Formula &f) const;
  std::optional<std::size_t> find(const Formula &f) const;

  const Formula &formula(std::size_t i) const { return steps_[i].formula; }
  std::size_t size() const { return steps_.size(); }
  Dialect dialect() const { return dialect_; }
  const std::shared_ptr<const ConstantSpec> &cs() const { return cs_; }

  /// Keeps only the lines the conclusion depends on.
  Derivation finish(std::size_t conclusion) const;

private:
  std::size_t push(Step s);

  Dialect dialect_;
  std::shared_ptr<const ConstantSpec> cs_;
  std::vector<Step> steps_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
};

} // namespace jlog
