#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace higgsnum::cli {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

/// Runs one invocation (args excludes the program name). Writes a single JSON
/// document, or a table with --format table, to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace higgsnum::cli
