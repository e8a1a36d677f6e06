#pragma once

#include <string>
#include <vector>

namespace symlap {

struct CriterionResult {
  std::string id;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct AcceptanceOptions {
  /// Include the determinism criterion, which reruns the others under one
  /// and several OpenMP threads.
  bool check_determinism = true;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// {"criteria": [{id, status, measured, tolerance}, ...], "all_passed": bool}
std::string acceptance_report_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace symlap
