#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genboot::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_domain = 3;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit status. Results go to `out` unless redirected by --out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace genboot::cli
