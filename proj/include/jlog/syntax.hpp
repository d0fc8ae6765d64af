#pragma once

// Concrete syntax: parsing and canonical printing of terms, formulas and
// sequents. The grammar is documented in docs/grammar.md.

#include "jlog/formula.hpp"
#include "jlog/sequent.hpp"
#include "jlog/term.hpp"

#include <string>
#include <string_view>

namespace jlog {

struct ParseOptions {
  /// Accept `?Name` metavariables (axiom patterns).
  bool allow_meta = false;
};

/// Parses a formula and validates it against the dialect.
/// Throws SyntaxError or DialectError.
Formula parse_formula(std::string_view text, Dialect dialect,
                      ParseOptions options = {});

/// Parses a proof term (`sort == Proof`) or justification term.
Term parse_term(std::string_view text, Sort sort, Dialect dialect,
                ParseOptions options = {});

/// `F1, F2 => G1, G2`; either side may be empty.
Sequent parse_sequent(std::string_view text, Dialect dialect);

std::string print_term(const Term &t);
std::string print_formula(const Formula &f);
std::string print_sequent(const Sequent &s);

/// Smallest dialect the formula conforms to: Modal if it has no
/// justification syntax, otherwise JE or JEM depending on its terms.
/// Formulas that use neither dialect-specific construct report JE.
Dialect infer_dialect(const Formula &f);

} // namespace jlog
