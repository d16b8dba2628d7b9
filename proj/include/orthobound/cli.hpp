#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace orthobound {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitHypothesisFailed = 2,
  kExitBoundViolated = 3,
};

/// Parses an ORTHOBOUND_TOL-style value; nullopt unless it is a finite
/// number in (0, 1).
std::optional<double> parse_tolerance(std::string_view text);

/// Full command-line front end: check, fuzz, sweep, integral-demo. Reports
/// go to `out` as JSON, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orthobound
