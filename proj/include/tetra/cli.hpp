#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace tetra::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Machine-readable outcome of one command.
///
/// Serialized with sorted keys, so equal reports produce byte-identical JSON.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::string provenance;
  std::string status = "ok";  // "ok" or "error"
  int code = kExitOk;
  std::string message;

  nlohmann::json to_json() const;
  std::string dump() const;  // two-space indented JSON, trailing newline
  static Report from_json(const nlohmann::json& j);
  static Report parse(const std::string& text);

  friend bool operator==(const Report&, const Report&) = default;
};

/// Runs the command line (args excludes the program name). Output goes to
/// out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tetra::cli
