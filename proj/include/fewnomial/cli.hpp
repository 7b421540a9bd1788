#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fewnomial::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitSolver = 3;

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fewnomial::cli
