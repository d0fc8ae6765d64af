#pragma once

#include "jlog/formula.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace jlog {

/// Values for the metavariables of a scheme pattern, keyed by name
/// (`F`, `G`, `L`, `T`, ...).
struct Binding {
  std::map<std::string, Formula> formulas;
  std::map<std::string, Term> terms;

  friend bool operator==(const Binding &, const Binding &) = default;
};

struct AxiomScheme {
  std::string id;
  Formula pattern;
  bool in_je = false;
  bool in_jem = false;
  /// Part of the fixed classical basis (shared by both dialects).
  bool propositional = false;

  bool belongs_to(Dialect d) const {
    return d == Dialect::JE ? in_je : d == Dialect::JEM && in_jem;
  }
};

/// Every scheme of both dialects plus the propositional basis, in a fixed
/// order: the justification schemes first, then the basis.
const std::vector<AxiomScheme> &axiom_catalogue();

/// Scheme ids of the dialect, including the propositional basis.
std::vector<std::string> scheme_ids(Dialect d);

/// nullptr for an unknown id.
const AxiomScheme *find_scheme(std::string_view id);

struct AxiomMatch {
  const AxiomScheme *scheme;
  Binding binding;
};

/// All schemes of the dialect that f instantiates, with their bindings.
std::vector<AxiomMatch> match_axiom(const Formula &f, Dialect dialect);

/// Matches a single pattern; on success the binding is filled in.
bool match_pattern(const Formula &pattern, const Formula &f, Binding &binding);
bool matches_scheme(const Formula &f, const AxiomScheme &scheme);

/// pattern[binding]. Unbound metavariables are left in place.
Formula instantiate(const Formula &pattern, const Binding &binding);
Term instantiate(const Term &pattern, const Binding &binding);

/// Instantiates a scheme whose metavariables are formulas only; fs binds
/// F, G, H in that order.
Formula axiom_instance(std::string_view id, const std::vector<Formula> &fs);

} // namespace jlog
