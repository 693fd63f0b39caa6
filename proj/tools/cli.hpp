#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rectchar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns the exit status:
/// 0 on success, 1 when a check fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rectchar::cli
