#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bellcone::cli {

/// Exit codes: 0 success, 1 failed construction precondition, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellcone::cli
