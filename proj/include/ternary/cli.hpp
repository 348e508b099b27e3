#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ternary::cli {

// Exit codes are a stable contract.
inline constexpr int exit_solvable = 0;
inline constexpr int exit_unsolvable = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_internal = 3;

/// Runs the command-line front end on already-split arguments (no argv[0]).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ternary::cli
