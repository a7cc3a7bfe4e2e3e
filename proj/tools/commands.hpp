#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussric::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Reports are
/// written under --out; human-readable summaries go to `out`, diagnostics
/// to `err`. Returns 0 when every check passes, 1 on a verification
/// failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaussric::cli
