#pragma once

#include <iosfwd>

namespace hyscat::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kToleranceFailure = 1,
    kUsageError = 2,
    kNumericalFailure = 3,
};

/// Entry point of the `hyscat` tool. Data goes to `out` (or --output), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyscat::cli
