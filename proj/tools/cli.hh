#pragma once

#include <iosfwd>

namespace rolecol::cli {

// Exit codes shared by every verb.
inline constexpr int exit_found = 0;     // found / holds
inline constexpr int exit_negative = 1;  // definite negative answer
inline constexpr int exit_usage = 2;     // usage, input or guard error
inline constexpr int exit_budget = 3;    // search stopped before an answer

/// Runs one command line. Results go to `out` (or to files named by --out),
/// diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace rolecol::cli
