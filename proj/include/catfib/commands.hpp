#pragma once

#include <string>
#include <vector>

#include "catfib/fincat.hpp"

namespace catfib::cmd {

/// Outcome of one CLI invocation. Exit codes: 0 = property holds or the
/// construction succeeded, 1 = property fails (report carries the witness),
/// 2 = invalid input. `output` is the rendering selected by --report.
struct CommandResult {
  int exitCode = 2;
  json report;
  std::string output;
};

/// Dispatches one command line (without the program name). Never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace catfib::cmd
