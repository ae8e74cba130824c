#pragma once

#include <string>
#include <vector>

namespace rigx::cli {

struct CliOutput {
  int exit_code = 0;
  std::string out;  // report (JSON) or emitted text
  std::string err;  // diagnostics
};

/// Exit codes: 0 outcome produced, 1 internal verification failure,
/// 2 precondition / hypothesis failure or bad usage, 3 budget exceeded,
/// 4 I/O or format error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitIo = 4;

/// Runs one `rigx` invocation; `args` excludes the program name.
CliOutput run_cli(const std::vector<std::string>& args);

}  // namespace rigx::cli
