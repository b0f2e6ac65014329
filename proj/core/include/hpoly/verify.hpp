#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hpoly {

struct CheckResult {
  std::string id;     // "AC1" ... "AC9"
  std::string title;
  bool passed = false;
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // skipped parts, timings of sub-steps
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct VerifyOptions {
  /// Also run the expensive parts (2^(truncated tetrahedron), rank-4 toroid).
  bool slow = false;
  /// Restrict to these ids; empty runs everything.
  std::vector<std::string> only;
  /// Called as each criterion finishes.
  std::function<void(const CheckResult&)> on_result;
};

/// Runs the acceptance suite against the catalog and the constructions.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace hpoly
