#pragma once

#include <iosfwd>
#include <string>

namespace permcover::cli {

enum ExitCode : int {
  ok = 0,
  failure = 1,
  validation = 2,
  infeasible = 3,
  verification = 4,
};

/// Table-1 annotation for a computed r(D_n): "e" when dn_bounds is exact,
/// otherwise "l" or "u" for the side of the interval it sits on. Throws
/// VerificationError when the value falls outside the interval.
std::string table1_annotation(int n, int value);

/// Parses argv and runs one subcommand. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace permcover::cli
