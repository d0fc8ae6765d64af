#pragma once

#include "jlog/semantics.hpp"
#include "jlog/sequent_proof.hpp"

#include <optional>

namespace jlog {

/// A finite neighborhood model for the modal language: □A holds at w iff
/// |A| ∈ N(w).
struct NeighborhoodModel {
  std::size_t worlds = 1;
  std::vector<std::set<std::string>> valuation;
  std::vector<std::set<WorldSet>> neighborhoods;
};

/// Throws UnknownWorld, or DialectError on justification formulas.
bool modal_truth(const NeighborhoodModel &m, std::size_t w, const Formula &f);
WorldSet modal_truth_set(const NeighborhoodModel &m, const Formula &f);
bool is_monotone(const NeighborhoodModel &m);

struct Countermodel {
  NeighborhoodModel model;
  std::size_t world = 0;
};

/// Smallest model (by number of worlds, up to max_worlds) falsifying f:
/// arbitrary neighborhoods for GE (logic E), monotone ones for GM (EM).
/// The returned model is re-checked with modal_truth.
std::optional<Countermodel> find_countermodel(const Formula &f,
                                              Calculus calculus,
                                              std::size_t max_worlds = 3);

} // namespace jlog
