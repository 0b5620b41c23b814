#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pilab {

inline constexpr int exit_pass = 0;
inline constexpr int exit_math_fail = 1;
inline constexpr int exit_error = 2;

/// Runs one subcommand (args exclude the program name). The report goes to
/// `out`; diagnostics, timing and kernel statistics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pilab
