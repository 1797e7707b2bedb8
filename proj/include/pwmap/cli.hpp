#pragma once

#include <string>
#include <vector>

namespace pwmap {

/// Exit statuses: 0 when every verdict passes, 2 when a checked property fails, 1 on input errors.
enum ExitStatus : int { exit_pass = 0, exit_input_error = 1, exit_check_failed = 2 };

struct CliResult {
  int status = exit_pass;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name), e.g. {"kappa", "--map", "fan.json"}.
CliResult run(const std::vector<std::string>& args);

}  // namespace pwmap
