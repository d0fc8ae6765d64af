#pragma once

// Shape of each sequent rule: which principal formulas it has and which
// premise occurrences are active (point into a principal formula).

#include "jlog/sequent_proof.hpp"

#include <optional>
#include <vector>

namespace jlog::detail {

struct PrincipalSpec {
  Side side;
  /// Required connective; nullopt means any formula.
  std::optional<Formula::Kind> kind;
};

struct ActiveSpec {
  Side premise_side;
  /// Index into the principal list.
  std::size_t principal;
  OccurrencePath path;

  friend auto operator<=>(const ActiveSpec &, const ActiveSpec &) = default;
};

struct RuleSchema {
  std::vector<PrincipalSpec> principals;
  /// One list per premise.
  std::vector<std::vector<ActiveSpec>> actives;
  /// Conclusion consists of the principal formulas only.
  bool no_context = false;
};

const RuleSchema &rule_schema(Rule r);

} // namespace jlog::detail
