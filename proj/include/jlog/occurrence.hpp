#pragma once

#include "jlog/formula.hpp"
#include "jlog/sequent.hpp"

#include <cstdint>
#include <vector>

namespace jlog {

/// Child indices from the root of a formula down to a subformula. For
/// binary connectives 0 is the left and 1 the right child; prefix nodes
/// have the single child 0.
using OccurrencePath = std::vector<std::uint8_t>;

/// A subformula occurrence inside a sequent.
struct SequentPosition {
  Side side = Side::Antecedent;
  std::size_t index = 0;
  OccurrencePath path;

  friend auto operator<=>(const SequentPosition &,
                          const SequentPosition &) = default;
};

enum class Polarity : std::uint8_t { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

/// Throws BadPath.
const Formula &subformula_at(const Formula &host, const OccurrencePath &path);
const Formula &subformula_at(const Sequent &host, const SequentPosition &pos);

/// Implication antecedents and negations flip polarity; every other
/// connective (including □ and [t]) preserves it.
Polarity polarity_at(const Formula &host, const OccurrencePath &path);
/// As above, additionally flipped for antecedent formulas.
Polarity polarity_at(const Sequent &host, const SequentPosition &pos);

/// Paths of all Box nodes, preorder.
std::vector<OccurrencePath> box_occurrences(const Formula &f);

/// ([t]A)° = □A°. Throws ProofOfPresent on a `λ:G` subformula.
Formula forgetful(const Formula &f);

} // namespace jlog
