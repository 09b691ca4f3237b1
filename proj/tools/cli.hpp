#pragma once

#include <iosfwd>

namespace tba::cli {

/// Parses argv and runs one subcommand, writing reports to out and
/// diagnostics to err.  Returns the process exit code: 0 on success,
/// 1 when a mathematical check fails, 2 on input or usage errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace tba::cli
