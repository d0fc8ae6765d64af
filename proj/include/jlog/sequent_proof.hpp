#pragma once

#include "jlog/occurrence.hpp"
#include "jlog/sequent.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace jlog {

enum class Calculus : std::uint8_t { GE, GM };

const char *calculus_name(Calculus c);
Calculus calculus_from_string(const std::string &s);

enum class Rule : std::uint8_t {
  AxP,
  AxBot,
  ImpL,
  ImpR,
  AndL,
  AndR,
  OrL,
  OrR,
  NotL,
  NotR,
  WL,
  WR,
  CL,
  CR,
  RE,
  RM,
};

const char *rule_name(Rule r);
Rule rule_from_string(const std::string &s);
std::size_t rule_arity(Rule r);

/// Where a premise formula occurrence sits in the conclusion: the
/// conclusion formula at (side, index), at the given path inside it.
/// Context formulas have an empty path; active formulas point at the
/// immediate subformula of the principal formula they come from.
struct Target {
  Side side = Side::Antecedent;
  std::size_t index = 0;
  OccurrencePath path;

  friend bool operator==(const Target &, const Target &) = default;
};

/// Correspondence for one premise: a target per antecedent and per
/// succedent occurrence of the premise.
struct Link {
  std::vector<Target> antecedent;
  std::vector<Target> succedent;

  const std::vector<Target> &side(Side s) const {
    return s == Side::Antecedent ? antecedent : succedent;
  }
  std::vector<Target> &side(Side s) {
    return s == Side::Antecedent ? antecedent : succedent;
  }
  friend bool operator==(const Link &, const Link &) = default;
};

struct ProofNode;
using SequentProof = std::shared_ptr<const ProofNode>;

struct Principal {
  Side side = Side::Antecedent;
  std::size_t index = 0;

  friend bool operator==(const Principal &, const Principal &) = default;
};

struct ProofNode {
  Sequent sequent;
  Rule rule = Rule::AxP;
  /// Principal occurrences of the conclusion. RE/RM and AxP list the
  /// antecedent occurrence first.
  std::vector<Principal> principal;
  std::vector<SequentProof> premises;
  /// links[k] belongs to premises[k].
  std::vector<Link> links;
};

/// Builds a node, computing the correspondence by matching formulas: the
/// active occurrences of each premise are the ones the rule demands, all
/// other premise occurrences are paired with equal non-principal
/// conclusion occurrences in order. Throws SequentProofError when the
/// premises do not fit.
SequentProof make_node(Rule rule, Sequent conclusion,
                       std::vector<Principal> principal,
                       std::vector<SequentProof> premises);

/// Adds weakenings (and contractions where the proof has more copies than
/// the target) until the conclusion is exactly `target`. Requires the
/// proof's conclusion to be a sub-multiset of the target.
SequentProof weaken_to(SequentProof p, const Sequent &target);

/// Throws SequentProofError (BadRule, BadCorrespondence, WrongCalculus).
/// Nodes are numbered in preorder from the root.
void check_sequent_proof(const SequentProof &p, Calculus calculus);

/// Number of nodes (shared subtrees counted once per use).
std::size_t proof_size(const SequentProof &p);
/// Longest branch counted in logical rules and axioms.
std::size_t proof_height(const SequentProof &p);

/// Bounded backward search. `depth` bounds the number of logical rules and
/// axioms on every branch. Sequents are handled as sets; duplicates of the
/// input are restored by contraction at the end.
std::optional<SequentProof> prove_bounded(const Sequent &s, Calculus calculus,
                                          std::size_t depth);

/// Pretty tree, one node per line, premises indented.
std::string print_proof(const SequentProof &p);

} // namespace jlog
