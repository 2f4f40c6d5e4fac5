#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulerhaar {

/// Input lies on the measure-zero boundary of an inverse chart.
class ChartBoundaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sum of exact values with incompatible pi powers; keep the terms separate.
class MixedTranscendenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ArityMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature exceeded its evaluation budget before reaching the
/// requested error target. Carries the best estimate obtained so far.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double best, double err,
                      std::size_t evaluations)
      : std::runtime_error(what),
        best_estimate(best),
        error_estimate(err),
        evaluations(evaluations) {}

  double best_estimate;
  double error_estimate;
  std::size_t evaluations;
};

}  // namespace eulerhaar
