#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ehrhart::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kComputationError = 2;
inline constexpr int kInvariantViolation = 3;

// Runs one invocation. `args` excludes the program name. `in` backs the `-`
// source.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ehrhart::cli
