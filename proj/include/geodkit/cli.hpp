#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geodkit {

/// Exit codes: 0 success / property holds, 1 property fails,
/// 2 usage or input error.
struct CommandResult {
  int exit_code = 0;
  std::string output;       // stdout payload
  std::string diagnostics;  // stderr text
};

/// Runs one command line (without the program name). A file argument of
/// "-" is read from `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);
CommandResult run(const std::vector<std::string>& args);

}  // namespace geodkit
