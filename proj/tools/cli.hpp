#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sandlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failure or round-trip mismatch
inline constexpr int kExitUsage = 2;

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sandlab::cli
