#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minorlab::cli {

/// Exit codes shared by every verb.
inline constexpr int exit_ok = 0;
inline constexpr int exit_counterexample = 1;
inline constexpr int exit_error = 2;

/// Runs one command line (args excludes the program name). Data goes to `out`,
/// diagnostics and usage to `err`.
auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int;

} // namespace minorlab::cli
