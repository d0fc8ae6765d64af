#pragma once

#include "jlog/formula.hpp"

#include <vector>

namespace jlog {

enum class Side : std::uint8_t { Antecedent, Succedent };

/// Γ ⊃ Δ. Both sides are multisets; the stored order fixes occurrence
/// identity (occurrence i of a side is the i-th element).
struct Sequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;

  const std::vector<Formula> &side(Side s) const {
    return s == Side::Antecedent ? antecedent : succedent;
  }
  std::vector<Formula> &side(Side s) {
    return s == Side::Antecedent ? antecedent : succedent;
  }
  std::size_t size() const { return antecedent.size() + succedent.size(); }

  friend bool operator==(const Sequent &, const Sequent &) = default;
  friend auto operator<=>(const Sequent &, const Sequent &) = default;
};

/// Equality as multisets (order ignored).
bool same_multiset(const Sequent &a, const Sequent &b);

} // namespace jlog
