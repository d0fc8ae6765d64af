#pragma once

#include "jlog/sequent_proof.hpp"

#include <map>
#include <vector>

namespace jlog {

/// The proof tree laid out in preorder; node 0 is the root.
struct FlatProof {
  std::vector<const ProofNode *> nodes;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> parent;
  /// Node ids in postorder (leaves first, left to right).
  std::vector<std::size_t> postorder;
};

FlatProof flatten(const SequentProof &p);

struct BoxOccurrence {
  std::size_t node;
  SequentPosition position;
};

struct Family {
  /// Box ids, in order of discovery.
  std::vector<std::size_t> members;
  bool essential = false;
  /// RE/RM nodes introducing a member (GM: a positive member), postorder.
  std::vector<std::size_t> introduced_by;
  Polarity polarity = Polarity::Positive;
  bool polarity_consistent = true;
  /// GE: index of the class of equivalent essential families, or npos.
  std::size_t cls = static_cast<std::size_t>(-1);
};

/// A class of equivalent essential families (GE).
struct FamilyClass {
  std::vector<std::size_t> families;
  /// RE nodes introducing a box into the class, postorder; n_f = size().
  std::vector<std::size_t> instances;
};

struct FamilyAnalysis {
  Calculus calculus = Calculus::GE;
  FlatProof flat;
  std::vector<BoxOccurrence> boxes;
  std::vector<std::size_t> family_of;
  /// Ordered by first member in a postorder sweep over the proof, where
  /// each node lists antecedent boxes before succedent boxes.
  std::vector<Family> families;
  std::vector<FamilyClass> classes;

  std::size_t box_id(std::size_t node, const SequentPosition &pos) const;

  std::map<std::pair<std::size_t, SequentPosition>, std::size_t> index;
};

/// Checks the proof, then partitions its box occurrences. Throws
/// SequentProofError(UncheckedProof) if the proof does not check.
FamilyAnalysis compute_families(const SequentProof &p, Calculus calculus);

} // namespace jlog
