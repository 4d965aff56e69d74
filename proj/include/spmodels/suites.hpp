#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spm {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Informational comparisons (e.g. against a printed table) do not count
  /// towards the suite verdict.
  bool informational = false;
  std::string detail;
  std::string residual;  // nonzero operator/polynomial on failure
};

struct SuiteParams {
  int n = 1;
  int copies = 1;
  std::vector<int> degrees;  // hwv suite
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::optional<int> dimension;
  std::vector<CheckResult> checks;

  bool pass() const;
  int failures() const;
};

/// so5, sp-invariance, parafermion, sl2-harmonic, so4-dual, so2N-dual,
/// realization, hwv.
std::vector<std::string> suite_names();

SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace spm
