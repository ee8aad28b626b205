#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace satip::cli {

using nlohmann::json;

struct CommandResult {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  double wall_time_ms = 0;

  friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

json to_json(const CommandResult& r);
CommandResult command_result_from_json(const json& j);

enum class Format { Json, Csv, Pretty };

std::string render(const CommandResult& r, Format format);

// Exit status: 0 on success, 1 for a library error, 2 for a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satip::cli
