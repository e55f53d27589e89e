#pragma once

#include <iosfwd>

namespace subcount {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad flags, unreadable files, generator preconditions
  kExitParse = 2,       // malformed graph or pattern file
  kExitInfeasible = 3,  // pattern without an edge cover or above the size cap
  kExitBudget = 4,      // every round exceeded its query budget, or oracle budget
  kExitMode = 5,        // color-mode mismatch or non-star pattern in star mode
};

/// Runs the `subcount` command line. The single result line goes to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subcount
