#pragma once

#include <nlohmann/json_fwd.hpp>

#include <complex>
#include <string>
#include <vector>

#include "eulerhaar/admissible.hpp"
#include "eulerhaar/exact_value.hpp"
#include "eulerhaar/jacobians.hpp"

namespace eulerhaar {

/// Value of a hypothesis integral: exact pi-graded sum when the integrand
/// admits closed-form evaluation, adaptive-quadrature estimate otherwise.
struct IntegralValue {
  bool exact = true;
  ExactSum exact_sum;                   // meaningful when exact
  std::complex<double> numeric{0, 0};   // meaningful when !exact
  double numeric_err = 0.0;
  std::size_t evaluations = 0;
  bool normalized = true;  // divided by the weight's own mass

  bool is_zero(double tol = 1e-9) const {
    return exact ? exact_sum.is_zero() : std::abs(numeric) < tol;
  }
  std::complex<double> to_complex() const {
    return exact ? exact_sum.to_complex() : numeric;
  }
};

struct IntegrationOptions {
  double target_err = 1e-9;
  std::size_t max_evals = 10'000'000;
  /// Forces the quadrature path for the xi region (Sp/G2 testing knob).
  /// The SU path has no xi region and always evaluates exactly.
  bool force_numeric = false;
  bool normalize = true;
};

/// The hypothesis integral of f^P against the family weight over the
/// family region: torus variables contribute only the zero-exponent
/// coefficient of f^P, [0,1]-variables integrate in closed form, and the
/// xi region evaluates exactly when every surviving term is polynomial in
/// the xi variables (otherwise adaptive quadrature at target_err).
///
/// Throws ArityMismatchError on arity disagreement, std::invalid_argument
/// for a G2 spec without an upper limit, NonConvergenceError when the
/// quadrature budget runs out.
IntegralValue integrate_hypothesis(const AdmissibleFunction& f, int p,
                                   const JacobianSpec& spec,
                                   const IntegrationOptions& opts = {});

/// Mass of the weight polynomial over its region (the normalizer).
IntegralValue weight_mass(const JacobianSpec& spec);

enum class ScanClassification {
  consistent,               // hypothesis holds, hull excludes zero
  hypothesis_fails,         // some power integral is nonzero
  counterexample_candidate  // hypothesis holds AND hull contains zero
};

std::string classification_name(ScanClassification c);

struct ScanEntry {
  int p = 0;
  IntegralValue value;
};

struct ScanReport {
  GroupFamily family;
  int n = 0;
  SpPairVariant sp_variant = SpPairVariant::printed;
  std::string g2_limit_label;
  int p_max = 0;
  std::vector<ScanEntry> entries;
  bool hypothesis_holds = false;
  bool all_exact = true;
  bool hull_zero = false;
  ScanClassification classification = ScanClassification::consistent;
};

/// Runs integrate_hypothesis for P = 1..p_max, tests the spectrum hull, and
/// classifies. The classification invariant:
/// counterexample_candidate iff hypothesis_holds and hull_zero.
ScanReport scan(const AdmissibleFunction& f, int p_max,
                const JacobianSpec& spec, const IntegrationOptions& opts = {});

nlohmann::json integral_value_to_json(const IntegralValue& v);
nlohmann::json scan_report_to_json(const ScanReport& r);
std::string scan_report_to_csv(const ScanReport& r);

}  // namespace eulerhaar
