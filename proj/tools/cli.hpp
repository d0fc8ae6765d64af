#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jlog::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 logical failure, 2 input or usage error.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace jlog::cli
