#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eulerhaar::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Battery knobs. Defaults are the acceptance-grade sizes; tests that only
/// need a smoke signal can shrink them.
struct VerifyConfig {
  std::uint64_t seed = 20260809ULL;
  std::size_t haar_samples = 1'000'000;    // per sampler and dimension
  std::size_t moment_samples = 1'000'000;  // per random monomial
  int param_draws = 1000;
  int roundtrip_draws = 1000;
  int hull_cases = 200;
  int monomial_cases = 50;
  int spectrum_cases = 50;
  int harness_integrands = 20;
  int torus_cases = 100;
  int scan_cases = 30;
};

// One battery per acceptance criterion, in criterion order.
SuiteResult run_generators(const VerifyConfig& cfg);         // 1
SuiteResult run_parametrization(const VerifyConfig& cfg);    // 2
SuiteResult run_su2_roundtrip(const VerifyConfig& cfg);      // 3
SuiteResult run_haar_agreement(const VerifyConfig& cfg);     // 4
SuiteResult run_monomial_mc(const VerifyConfig& cfg);        // 5
SuiteResult run_constraint_det(const VerifyConfig& cfg);     // 6
SuiteResult run_beta(const VerifyConfig& cfg);               // 7
SuiteResult run_hull(const VerifyConfig& cfg);               // 8
SuiteResult run_harness(const VerifyConfig& cfg);            // 9
SuiteResult run_spectrum_algebra(const VerifyConfig& cfg);   // 10

/// Named suite dispatch: "all", "haar" (4), "beta" (7), "hull" (8),
/// "detA" (6). Throws std::invalid_argument on unknown names.
std::vector<SuiteResult> run_suite(const std::string& suite,
                                   const VerifyConfig& cfg);

/// Whether the named suite draws random numbers (and so needs a seed).
bool suite_is_stochastic(const std::string& suite);

// Brute-force hull oracles, independent of the production decision path.
// The enumeration is exact and complete; the grid search can only confirm
// containment (witness with bounded denominator).
bool hull_oracle_enumeration(const std::vector<std::vector<int>>& points);
bool hull_oracle_grid(const std::vector<std::vector<int>>& points,
                      int max_denominator);

}  // namespace eulerhaar::verify
