#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace retractkit::cli {

enum class Status { ok, precondition_violated, not_found_within_bound, theorem_inconsistency, parse_error };

std::string to_string(Status s);

// 0 ok, 1 not found within bound, 2 user error, 3 theorem inconsistency.
int exit_code(Status s);

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload = nlohmann::json::object();
  // Usage or help text. When set it replaces the JSON output.
  std::string text;
  bool usage_error = false;
  bool pretty = false;

  int exit_code() const { return usage_error ? 2 : cli::exit_code(status); }
  // {"status": ..., payload...} on one line, or indented with --pretty.
  std::string render() const;
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace retractkit::cli
