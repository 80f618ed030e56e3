#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace landauer {

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputationError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one subcommand (bound, gate, profile, demon, grover) and writes a
// single report to `out`. `args` excludes the program name. Diagnostics go
// to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landauer
