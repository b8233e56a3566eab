#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hball {

enum ExitCode : int { exit_constructible = 0, exit_input_error = 1, exit_impossible = 2, exit_unknown = 3 };

struct CommandRequest {
  std::string subcommand;
  std::vector<std::string> args;  // vectors ("h:...") or complex file paths
  std::optional<int> dim;
  std::optional<int> x;
  std::optional<int> y;
  int cap_absent_edges = 7;
  bool recursive_splits = false;
  bool m_nonneg = true;
  std::string output;  // empty: report only on stdout
};

struct CommandResult {
  int exit_code = exit_unknown;
  std::string report;  // JSON text, newline terminated
};

/// Runs one subcommand. Never throws; failures become exit code 1 with an error report.
CommandResult dispatch(const CommandRequest& r);

const std::vector<std::string>& subcommands();

}  // namespace hball
