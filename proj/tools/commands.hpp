#pragma once

namespace tribodyn_cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

/// Parses the command line, runs one subcommand and returns the exit code.
int run(int argc, char** argv);

}  // namespace tribodyn_cli
