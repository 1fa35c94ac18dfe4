#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ricciforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCheckFailed = 3;

/// Runs the command line (args excludes the program name). Summary lines go
/// to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ricciforge::cli
