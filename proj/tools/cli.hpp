#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treedim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTooLarge = 3;

/// Runs one command line (args[0] is the program name) against the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treedim::cli
