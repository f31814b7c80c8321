#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCongruenceFailure = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace casson::cli
