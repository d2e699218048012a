#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `xl` tool. `args` excludes the program name.
/// Subcommands: multinomial, dmin, solve, experiment, verify.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a..b", "a,b,c" or "a"; throws std::invalid_argument.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace xl::cli
