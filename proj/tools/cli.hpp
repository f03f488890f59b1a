#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tridecomp::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitInternal = 70;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tridecomp::cli
