#pragma once

#include "jlog/formula.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace jlog {

/// Intensional constant specification: a constant justifies exactly the
/// instances of the schemes assigned to it, so every representable CS is
/// schematic.
struct ConstantSpec {
  std::map<std::string, std::set<std::string>> assignment;

  /// One constant `c_<id>` per scheme of the whole catalogue.
  static ConstantSpec total();

  friend bool operator==(const ConstantSpec &, const ConstantSpec &) = default;
};

/// (α, f) ∈ CS.
bool cs_contains(const ConstantSpec &cs, const std::string &constant,
                 const Formula &f);

/// Scheme ids of the dialect not assigned to any constant; empty means
/// the CS is axiomatically appropriate.
std::set<std::string> check_axiomatically_appropriate(const ConstantSpec &cs,
                                                       Dialect dialect);

/// Lexicographically least constant covering the scheme.
std::optional<std::string> constant_for(const ConstantSpec &cs,
                                        const std::string &scheme);

/// Plain-text format, see docs/formats.md. Throws FormatError.
ConstantSpec parse_constant_spec(const std::string &text);
std::string print_constant_spec(const ConstantSpec &cs);

} // namespace jlog
