#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evfuse {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line tool. `args` excludes the program name. Reports go
// to `out` (or --output), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace evfuse
