#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace abelcycle::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  /// A requested check (monotonicity, property suite) failed.
  kCheckFailed = 1,
  kUsage = 2,
  /// Numerical failure, including "no cycle in bracket".
  kNumerical = 3,
  kIo = 4,
};

/// Parses "a/b" or a plain decimal. Returns nullopt on malformed input or a
/// zero denominator.
std::optional<double> parse_rational(std::string_view text);

/// Runs the command line. Data goes to --out when given, otherwise to `out`;
/// diagnostics and run headers go to `err` (or to `out` when --out is set).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace abelcycle::cli
