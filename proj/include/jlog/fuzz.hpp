#pragma once

#include "jlog/semantics.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace jlog {

struct FuzzFailure {
  std::size_t trial = 0;
  std::string scheme;
  Formula instance;
};

struct FuzzReport {
  Dialect dialect = Dialect::JE;
  std::size_t trials = 0;
  /// Random evaluations that failed check_basic_model after saturation
  /// and were replaced by a fresh draw.
  std::size_t redrawn = 0;
  std::size_t instances = 0;
  std::map<std::string, std::size_t> per_scheme;
  std::vector<FuzzFailure> failures;
};

/// Random saturated basic models against random instances of every scheme
/// of the dialect. Each trial draws from its own generator seeded by
/// (seed, trial), so the report does not depend on `threads` (0 = use the
/// hardware concurrency).
FuzzReport soundness_fuzz(Dialect dialect, std::size_t trials,
                          std::uint64_t seed, unsigned threads = 0);

} // namespace jlog
