#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace eulerhaar {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // conservative absolute error estimate
  std::size_t evaluations = 0;
};

inline constexpr std::size_t kDefaultQuadratureBudget = 10'000'000;

/// Adaptive Gauss-Legendre on [a, b]. Local error per interval is the
/// GL15-vs-GL7 rule difference; the worst interval is bisected until the
/// summed estimate meets target_err. Throws NonConvergenceError when the
/// evaluation budget runs out first.
QuadratureResult integrate_1d(const std::function<double(double)>& f, double a,
                              double b, double target_err,
                              std::size_t max_evals = kDefaultQuadratureBudget);

/// Bounds of nesting level `level` (0 = outermost) given the already-fixed
/// outer coordinates, in nesting order.
using NestedLimit =
    std::function<std::pair<double, double>(std::span<const double>)>;

/// Iterated adaptive quadrature over a region described by per-level limits.
/// The integrand receives the point in nesting order (outermost first).
/// The error target is split across levels so the reported estimate bounds
/// the total; all levels share one evaluation budget.
QuadratureResult integrate_nested(
    const std::function<double(std::span<const double>)>& f,
    const std::vector<NestedLimit>& limits, double target_err,
    std::size_t max_evals = kDefaultQuadratureBudget);

/// Axis-aligned box.
QuadratureResult integrate_box(
    const std::function<double(std::span<const double>)>& f,
    const std::vector<double>& lo, const std::vector<double>& hi,
    double target_err, std::size_t max_evals = kDefaultQuadratureBudget);

/// Ordered simplex 0 <= x_1 <= x_2 <= ... <= x_dim <= 1. The integrand
/// receives (x_1, ..., x_dim) in natural order.
QuadratureResult integrate_ordered_simplex(
    const std::function<double(std::span<const double>)>& f, int dim,
    double target_err, std::size_t max_evals = kDefaultQuadratureBudget);

}  // namespace eulerhaar
