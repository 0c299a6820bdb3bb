#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kResourceCap = 3,
};

/// A time argument: either a literal or a multiple of n ("3n", "0.785n").
struct TimeSpec {
  double value = 0.0;
  bool per_n = false;

  double resolve(int n) const { return per_n ? value * n : value; }
};

/// Parses "12", "1e3", "3n", "0.785n". Throws std::invalid_argument.
TimeSpec parse_time(const std::string& text);

/// %.17g; inf/nan spelled "inf", "-inf", "nan".
std::string format_double(double value);

/// Runs one invocation. `args` excludes the program name. CSV goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
