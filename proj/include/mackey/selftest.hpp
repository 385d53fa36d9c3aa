#pragma once

// The acceptance suite as callable checks.  Each criterion returns one
// CheckResult; `run_selftest` runs them all into a single report whose bytes
// depend only on the tool version.

#include "mackey/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace mackey {

struct Criterion {
  int id = 0;
  std::string title;
  double time_limit_seconds = 0;
  std::function<CheckResult(const ExecOptions&)> run;
};

/// Criteria 1..9; determinism (10) is checked by running the suite twice.
const std::vector<Criterion>& acceptance_criteria();

/// Runs every criterion.  `progress` is called after each one.
VerificationReport run_selftest(const ExecOptions& opts = {},
                                const std::function<void(const Criterion&, const CheckResult&, double)>& progress = {});

}  // namespace mackey
