#pragma once

#include "jlog/derivation.hpp"
#include "jlog/families.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jlog {

/// Term skeletons for the boxes of a proof. GE: non-essential families get
/// e(p_k), each class of equivalent essential families e(z_a + ... + z_b)
/// with one provisional proof variable per introducing RE instance. GM:
/// non-essential families get x_k, essential ones v_a + ... + v_b with one
/// provisional justification variable per introducing RM instance.
struct RealizationPlan {
  Calculus calculus = Calculus::GE;
  /// Justification term per family.
  std::vector<Term> family_term;
  /// RE/RM node id to the provisional variable it eliminates.
  std::map<std::size_t, Term> provisional;
};

RealizationPlan build_plan(const FamilyAnalysis &analysis);

struct RealizationOptions {
  /// ζ := λ when both internalized terms coincide, instead of λ + λ.
  bool simplify = false;
  /// Re-check every pending derivation after each global substitution.
  bool check_stability = false;
};

/// What happened at one RE/RM instance.
struct RealizationStep {
  std::size_t node = 0;
  Rule rule = Rule::RE;
  Term provisional;
  Term replacement;
  /// Internalized terms and the implications they prove.
  std::vector<Term> terms;
  std::vector<Formula> proves;
};

struct RealizationResult {
  Calculus calculus = Calculus::GE;
  bool simplified = false;
  Formula realized;
  Derivation derivation;
  std::vector<RealizationStep> log;
  SequentProof proof;
  RealizationPlan plan;
};

/// Runs the realization algorithm on a proof of `=> A`. Throws
/// NotAppropriate, SequentProofError(UncheckedProof) or RealizationError.
RealizationResult realize(const SequentProof &p, Calculus calculus,
                          const ConstantSpec &cs,
                          RealizationOptions options = {});

/// Re-runs the algorithm with simplification. Falls back to the input if
/// the simplified derivation does not check.
RealizationResult simplify(const RealizationResult &result,
                           const ConstantSpec &cs);

/// Throws RealizationError with kind RoundtripMismatch, DerivationFails,
/// ProvisionalLeak or NotNormal.
void verify_realization(const RealizationResult &result, const Formula &source,
                        Calculus calculus, const ConstantSpec &cs);

/// Same checks on a bare formula and derivation.
void verify_realization(const Formula &realized, const Derivation &derivation,
                        const Formula &source, Calculus calculus,
                        const ConstantSpec &cs);

/// Searches for a proof of `=> f` and realizes it; nullopt when the bounded
/// search finds none.
std::optional<RealizationResult> realize_formula(const Formula &f,
                                                 Calculus calculus,
                                                 const ConstantSpec &cs,
                                                 std::size_t depth,
                                                 RealizationOptions options = {});

} // namespace jlog
