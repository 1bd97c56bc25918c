#ifndef SILENCE_CLI_HPP
#define SILENCE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace silence::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitInfeasible = 3;

/// Runs the command line `args` (args[0] is the program name). Data files
/// go under --out; human-readable summaries to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace silence::cli

#endif  // SILENCE_CLI_HPP
