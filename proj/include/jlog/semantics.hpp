#pragma once

#include "jlog/constant_spec.hpp"
#include "jlog/formula.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace jlog {

/// ε with finite support: atoms not listed are false, terms without an
/// entry map to ∅.
struct FiniteBasicEvaluation {
  Dialect dialect = Dialect::JE;
  std::set<std::string> true_atoms;
  std::map<Term, FormulaSet> table;

  const FormulaSet &at(const Term &t) const;
  /// Terms with an entry, together with all their subterms.
  std::set<Term> universe() const;

  friend bool operator==(const FiniteBasicEvaluation &,
                         const FiniteBasicEvaluation &) = default;
};

/// X · Y = {F | G → F ∈ X for some G ∈ Y}.
FormulaSet dot(const FormulaSet &x, const FormulaSet &y);
/// X ⊙ Y = {F | F → G ∈ X and G → F ∈ X for some G ∈ Y}.
FormulaSet circle(const FormulaSet &x, const FormulaSet &y);
/// λ : X.
FormulaSet prefix(const Term &lambda, const FormulaSet &x);

struct SaturationOptions {
  /// Largest term depth (a variable or constant has depth 1).
  unsigned bound = 3;
  /// CS instances are built from these formulas, with term metavariables
  /// ranging over the variables and constants of the evaluation, and kept
  /// up to this formula depth. An empty pool seeds nothing.
  std::vector<Formula> pool;
  unsigned cs_depth = 5;
};

struct Saturation {
  FiniteBasicEvaluation evaluation;
  /// Some term of the maximal depth carries content, so the next level up
  /// would receive formulas that the table does not record.
  bool bound_exhausted = false;
};

/// Least extension satisfying the closure conditions of the dialect on
/// every term of depth ≤ bound built from the evaluation's variables and
/// constants.
Saturation saturate(const FiniteBasicEvaluation &e, const ConstantSpec &cs,
                    const SaturationOptions &options = {});

/// ε ⊩ f. Throws DialectError on □.
bool eval_basic(const FiniteBasicEvaluation &e, const Formula &f);

struct Violation {
  std::string condition;
  std::string detail;
};

/// Closure conditions over the universe of e plus factivity. Empty means e
/// is a basic model relative to its universe and the CS pool.
std::vector<Violation> check_basic_model(const FiniteBasicEvaluation &e,
                                         const ConstantSpec &cs,
                                         const SaturationOptions &options = {});

/// Worlds are 0..n-1 with n ≤ 64; a set of worlds is a bitmask.
using WorldSet = std::uint64_t;

struct QuasiModel {
  std::size_t worlds = 1;
  std::vector<std::set<WorldSet>> neighborhoods;
  std::vector<FiniteBasicEvaluation> evaluations;
};

/// M, w ⊩ f. Throws UnknownWorld.
bool model_truth(const QuasiModel &m, std::size_t w, const Formula &f);
/// |f|^M.
WorldSet truth_set(const QuasiModel &m, const Formula &f);

/// JYB, factivity and the closure conditions at every world; for JEM also
/// monotonicity of N.
std::vector<Violation> check_modular(const QuasiModel &m, Dialect dialect,
                                     const ConstantSpec &cs,
                                     const SaturationOptions &options = {});

struct MissingWitness {
  std::size_t world;
  Formula formula;
};

/// Pairs (w, F) with |F| ∈ N(w) but F ∉ ε_w(t) for every justification
/// term t with an entry.
std::vector<MissingWitness>
check_fully_explanatory(const QuasiModel &m,
                        const std::vector<Formula> &formulas);

/// Per world, the smallest superset-closed family containing N(w).
std::vector<std::set<WorldSet>>
monotone_closure(const std::vector<std::set<WorldSet>> &n, std::size_t worlds);

/// One world w with ε_w = e and N(w) = {|G| | G ∈ e(t), t a justification
/// term}. Throws NotBasicModel when check_basic_model fails.
QuasiModel build_singleton_model(const FiniteBasicEvaluation &e,
                                 const ConstantSpec &cs,
                                 const SaturationOptions &options = {});

} // namespace jlog
