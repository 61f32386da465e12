#pragma once

// Command-line front end. run_command is the whole program minus process I/O,
// so tests drive it directly.

#include <string>
#include <vector>

#include <json.hpp>

namespace maxalg::cli {

using Json = nlohmann::ordered_json;

// 1 is a negative mathematical answer (no scaling, divergent star, bound
// inapplicable), never an error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kExactness = 3, kInternal = 4 };

struct AnalysisReport {
  std::string command;      // argv echo, program name excluded
  Json inputs = Json::array();  // one entry per matrix file, with a content digest
  std::string status = "ok";    // ok | negative | inapplicable | error
  Json results = Json::object();
  std::vector<std::string> warnings;
  std::string error;

  Json to_json() const;
  std::string to_text() const;
};

struct CommandResult {
  AnalysisReport report;
  int exit_code = kOk;
  std::string out;  // what the program writes to stdout
  std::string err;  // and to stderr
};

CommandResult run_command(const std::vector<std::string>& args);

std::string usage();

}  // namespace maxalg::cli
