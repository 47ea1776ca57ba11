#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace compcov::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2, kMismatch = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "a:b" or "a:b:step" (inclusive), or a comma list. Every value must be
/// >= `min_value` and the list strictly increasing.
std::vector<int> parse_range(const std::string& text, int min_value = 1);

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
/// The same, reading `accelerate` input from `in` instead of stdin.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace compcov::cli
