#pragma once

// Subcommand dispatch for the hgcli front end.

#include <ostream>

namespace hg::cli {

/// Exit codes: 0 when every check passes, 1 on a numerical failure, 2 on a usage error.
enum ExitCode : int { kExitOk = 0, kExitNumeric = 1, kExitUsage = 2 };

/// Runs one command line.  Tables go to `out`; summaries and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hg::cli
