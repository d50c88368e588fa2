#pragma once

#include <string>
#include <vector>

namespace nilcent {

struct CriterionResult {
  std::string id;       // e.g. "1-b2-example"
  std::string title;
  std::string outcome;  // "pass", "fail", "inconclusive" or "skipped"
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  /// Include the F4(a3) Bruhat cell run.
  bool stretch = false;
};

/// Suites: "classical", "exceptional-structural", "exceptional-groups", "properties", "stretch".
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opt = {});
/// Checks for one algebra: classical sweep for B/C/D labels, table comparison when a reference
/// table is shipped, otherwise closure of every computed group.
std::vector<CriterionResult> verify_algebra(const std::string& algebra);

/// Process exit code for a list of results: 0 all pass, 2 inconclusive present, 1 failure.
int exit_code(const std::vector<CriterionResult>& results);
std::string report_json(const std::vector<CriterionResult>& results);

}  // namespace nilcent
