#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyvortex {

/// Exit codes: 0 success, 2 validation error, 3 computation error.
enum CliExit { kCliOk = 0, kCliValidationError = 2, kCliComputationError = 3 };

/// Parse and dispatch one command line (without the program name).
/// Results go to `out`; human-readable diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyvortex
