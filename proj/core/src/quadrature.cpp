#include "eulerhaar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "eulerhaar/errors.hpp"

namespace eulerhaar {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton iteration
// on the Legendre recurrence. Accurate to machine precision for these orders.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule make_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& rule7() {
  static const GaussRule r = make_rule(7);
  return r;
}

const GaussRule& rule15() {
  static const GaussRule r = make_rule(15);
  return r;
}

struct Interval {
  double a, b;
  double value;  // GL15 estimate
  double error;  // |GL15 - GL7|
  bool operator<(const Interval& o) const { return error < o.error; }
};

class Budget {
 public:
  explicit Budget(std::size_t max_evals) : remaining_(max_evals) {}
  void spend(std::size_t n, double best, double err) {
    if (n > remaining_) {
      throw NonConvergenceError(
          "quadrature evaluation budget exhausted before reaching target",
          best, err, spent_);
    }
    remaining_ -= n;
    spent_ += n;
  }
  std::size_t spent() const { return spent_; }

 private:
  std::size_t remaining_;
  std::size_t spent_ = 0;
};

double apply_rule(const GaussRule& rule, const std::function<double(double)>& f,
                  double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return acc * half;
}

Interval estimate(const std::function<double(double)>& f, double a, double b,
                  Budget& budget, double best_so_far, double err_so_far) {
  budget.spend(22, best_so_far, err_so_far);
  const double v15 = apply_rule(rule15(), f, a, b);
  const double v7 = apply_rule(rule7(), f, a, b);
  return {a, b, v15, std::abs(v15 - v7)};
}

QuadratureResult integrate_1d_budgeted(const std::function<double(double)>& f,
                                       double a, double b, double target_err,
                                       Budget& budget) {
  if (!(b >= a)) {
    throw std::invalid_argument("quadrature interval has b < a");
  }
  if (a == b) {
    return {0.0, 0.0, 0};
  }
  const std::size_t start_evals = budget.spent();
  std::priority_queue<Interval> queue;
  queue.push(estimate(f, a, b, budget, 0.0, 0.0));
  double total = queue.top().value;
  double total_err = queue.top().error;
  // Floor: once subdivision hits rounding noise, further splits cannot help.
  const double floor_err = 1e-15 * std::max(1.0, std::abs(total));
  while (total_err > target_err && total_err > floor_err) {
    Interval worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at double resolution
      queue.push({worst.a, worst.b, worst.value, 0.0});
      total_err = 0.0;
      for (auto copy = queue; !copy.empty(); copy.pop()) {
        total_err += copy.top().error;
      }
      continue;
    }
    const Interval left = estimate(f, worst.a, mid, budget, total, total_err);
    const Interval right = estimate(f, mid, worst.b, budget, total, total_err);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  return {total, total_err, budget.spent() - start_evals};
}

QuadratureResult integrate_nested_impl(
    const std::function<double(std::span<const double>)>& f,
    const std::vector<NestedLimit>& limits, double target_err, Budget& budget,
    std::vector<double>& point, std::size_t level) {
  const auto [lo, hi] = limits[level](
      std::span<const double>(point.data(), level));
  const bool innermost = level + 1 == limits.size();
  // Half the local budget goes to this level, half to the stack below;
  // nested regions here always sit inside [0,1]^d, so an inner absolute
  // error integrates to at most the same absolute error outside.
  const double local_target = innermost ? target_err : 0.5 * target_err;
  double inner_err = 0.0;
  auto slice = [&](double x) {
    point[level] = x;
    if (innermost) {
      return f(std::span<const double>(point.data(), point.size()));
    }
    const QuadratureResult inner = integrate_nested_impl(
        f, limits, 0.5 * target_err, budget, point, level + 1);
    inner_err = std::max(inner_err, inner.error);
    return inner.value;
  };
  QuadratureResult res = integrate_1d_budgeted(slice, lo, hi, local_target, budget);
  res.error += inner_err * std::max(0.0, hi - lo);
  return res;
}

}  // namespace

QuadratureResult integrate_1d(const std::function<double(double)>& f, double a,
                              double b, double target_err,
                              std::size_t max_evals) {
  Budget budget(max_evals);
  QuadratureResult res = integrate_1d_budgeted(f, a, b, target_err, budget);
  res.evaluations = budget.spent();
  return res;
}

QuadratureResult integrate_nested(
    const std::function<double(std::span<const double>)>& f,
    const std::vector<NestedLimit>& limits, double target_err,
    std::size_t max_evals) {
  if (limits.empty()) {
    throw std::invalid_argument("integrate_nested requires at least one level");
  }
  Budget budget(max_evals);
  std::vector<double> point(limits.size(), 0.0);
  QuadratureResult res =
      integrate_nested_impl(f, limits, target_err, budget, point, 0);
  res.evaluations = budget.spent();
  return res;
}

QuadratureResult integrate_box(
    const std::function<double(std::span<const double>)>& f,
    const std::vector<double>& lo, const std::vector<double>& hi,
    double target_err, std::size_t max_evals) {
  if (lo.size() != hi.size() || lo.empty()) {
    throw std::invalid_argument("box bounds must be nonempty and matched");
  }
  std::vector<NestedLimit> limits;
  limits.reserve(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    limits.push_back([&lo, &hi, i](std::span<const double>) {
      return std::make_pair(lo[i], hi[i]);
    });
  }
  return integrate_nested(f, limits, target_err, max_evals);
}

QuadratureResult integrate_ordered_simplex(
    const std::function<double(std::span<const double>)>& f, int dim,
    double target_err, std::size_t max_evals) {
  if (dim < 1) {
    throw std::invalid_argument("simplex dimension must be >= 1");
  }
  // Nesting order x_dim (outermost, in [0,1]) down to x_1 in [0, x_2].
  std::vector<NestedLimit> limits;
  limits.reserve(dim);
  for (int level = 0; level < dim; ++level) {
    limits.push_back([level](std::span<const double> outer) {
      const double hi = level == 0 ? 1.0 : outer[level - 1];
      return std::make_pair(0.0, hi);
    });
  }
  std::vector<double> natural(dim);
  auto reordered = [&f, dim, &natural](std::span<const double> nested) {
    for (int i = 0; i < dim; ++i) {
      natural[i] = nested[dim - 1 - i];
    }
    return f(std::span<const double>(natural.data(), natural.size()));
  };
  return integrate_nested(reordered, limits, target_err, max_evals);
}

}  // namespace eulerhaar
