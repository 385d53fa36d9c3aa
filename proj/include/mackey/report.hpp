#pragma once

// Verification reports shared by the worked example, the CLI and selftest.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mackey {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  bool pass = false;
  Json details;
};

struct VerificationReport {
  std::string target;  // eq9, eq10, acyclicity, splitting, stable-model, selftest, ...
  std::vector<CheckResult> checks;
  Json witness;  // null when the target has none
  Json inputs;   // name -> content hash
  std::optional<double> wall_seconds;

  bool pass() const;
  CheckResult& add(std::string name, bool pass, Json details = nullptr);
};

struct ExecOptions {
  bool parallel = false;  // evaluate independent per-object checks concurrently
};

}  // namespace mackey
