/* cli.hpp -- entry point of the preimage command-line tool */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace preimage::cli {

/// Name of the environment variable overriding the default node budget.
inline constexpr const char* budget_env = "PREIMAGE_BUDGET";

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// status. InternalError escapes so the caller can abort.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace preimage::cli
