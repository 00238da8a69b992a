#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace forestcover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;  // verify found the solution invalid
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInstance = 3;
inline constexpr int kExitSolver = 4;

// Runs one subcommand (exact, binary, random, round, bfc, gen, bench, verify).
// `args` excludes the program name. Reports go to `out` or --out, the text
// summary and diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forestcover
