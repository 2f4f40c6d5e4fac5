#include "eulerhaar/hull.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace eulerhaar {

namespace {

int dimension_of(const std::vector<std::vector<int>>& points) {
  const std::size_t d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) {
      throw std::invalid_argument("hull points have mixed dimensions");
    }
  }
  return static_cast<int>(d);
}

// Solves the (d+1) x t system  [coords; ones] w = (0,...,0,1)  exactly.
// Returns the weights when the solution is unique and nonnegative.
std::optional<std::vector<Rational>> solve_subset(
    const std::vector<std::vector<int>>& points,
    const std::vector<int>& subset, int dim) {
  const int rows = dim + 1;
  const int cols = static_cast<int>(subset.size());
  std::vector<std::vector<Rational>> a(rows,
                                       std::vector<Rational>(cols + 1, 0));
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < dim; ++r) {
      a[r][c] = points[subset[c]][r];
    }
    a[dim][c] = 1;
  }
  a[dim][cols] = 1;  // sum of weights

  std::vector<int> pivot_col_of_row(rows, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    const Rational inv = Rational(1) / a[rank][c];
    for (int cc = c; cc <= cols; ++cc) a[rank][cc] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (int cc = c; cc <= cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    pivot_col_of_row[rank] = c;
    ++rank;
  }
  if (rank < cols) {
    return std::nullopt;  // affinely dependent; smaller subsets cover this
  }
  for (int r = rank; r < rows; ++r) {
    if (a[r][cols] != 0) return std::nullopt;  // inconsistent
  }
  std::vector<Rational> w(cols, 0);
  for (int r = 0; r < rank; ++r) {
    w[pivot_col_of_row[r]] = a[r][cols];
  }
  for (const auto& wi : w) {
    if (wi < 0) return std::nullopt;
  }
  return w;
}

}  // namespace

std::optional<std::vector<Rational>> hull_witness_caratheodory(
    const std::vector<std::vector<int>>& points) {
  const int dim = dimension_of(points);
  const int n = static_cast<int>(points.size());
  const int max_size = std::min(dim + 1, n);
  // A zero representation, if any, exists on some affinely independent
  // subset of at most dim+1 points.
  std::vector<int> subset;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    subset.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(i);
    }
    if (auto w = solve_subset(points, subset, dim)) {
      std::vector<Rational> full(n, 0);
      for (std::size_t i = 0; i < subset.size(); ++i) {
        full[subset[i]] = (*w)[i];
      }
      return full;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Rational>> hull_witness_simplex(
    const std::vector<std::vector<int>>& points) {
  const int dim = dimension_of(points);
  const int n = static_cast<int>(points.size());
  const int rows = dim + 1;
  const int total_cols = n + rows;  // weights then artificials

  // Phase-1 tableau: minimize the artificial sum subject to
  //   sum_i w_i * p_i = 0,  sum_i w_i = 1,  w >= 0.
  std::vector<std::vector<Rational>> t(rows,
                                       std::vector<Rational>(total_cols + 1, 0));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < n; ++c) {
      t[r][c] = r < dim ? Rational(points[c][r]) : Rational(1);
    }
    t[r][n + r] = 1;
  }
  t[dim][total_cols] = 1;  // rhs: all zero except the weight-sum row
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = n + r;

  // Reduced-cost row for objective sum(artificials), expressed through the
  // current (artificial) basis: z_j - c_j = sum of rows for structural cols.
  std::vector<Rational> cost(total_cols + 1, 0);
  for (int c = 0; c <= total_cols; ++c) {
    Rational s = 0;
    for (int r = 0; r < rows; ++r) s += t[r][c];
    const Rational cj = c >= n && c < total_cols ? Rational(1) : Rational(0);
    cost[c] = s - cj;
  }

  // Bland's rule: smallest eligible entering and leaving indices; terminates
  // without cycling.
  while (true) {
    int entering = -1;
    for (int c = 0; c < total_cols; ++c) {
      if (cost[c] > 0) {
        entering = c;
        break;
      }
    }
    if (entering < 0) break;
    int leaving = -1;
    Rational best_ratio = 0;
    for (int r = 0; r < rows; ++r) {
      if (t[r][entering] <= 0) continue;
      const Rational ratio = t[r][total_cols] / t[r][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) {
      // Unbounded phase-1 cannot happen (objective bounded below by 0);
      // defensive stop.
      throw std::logic_error("phase-1 simplex reported unbounded");
    }
    const Rational piv = t[leaving][entering];
    for (int c = 0; c <= total_cols; ++c) t[leaving][c] /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == leaving || t[r][entering] == 0) continue;
      const Rational f = t[r][entering];
      for (int c = 0; c <= total_cols; ++c) t[r][c] -= f * t[leaving][c];
    }
    {
      const Rational f = cost[entering];
      if (f != 0) {
        for (int c = 0; c <= total_cols; ++c) cost[c] -= f * t[leaving][c];
      }
    }
    basis[leaving] = entering;
  }

  // Optimal objective = cost[rhs]; feasible iff it is zero.
  if (cost[total_cols] != 0) return std::nullopt;
  std::vector<Rational> w(n, 0);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < n) {
      w[basis[r]] = t[r][total_cols];
    }
  }
  return w;
}

std::optional<std::vector<Rational>> hull_zero_witness(
    const std::vector<std::vector<int>>& points) {
  if (points.empty()) {
    throw std::invalid_argument("hull test requires a nonempty spectrum");
  }
  if (points.size() <= 12) {
    return hull_witness_caratheodory(points);
  }
  return hull_witness_simplex(points);
}

bool hull_contains_zero(const std::vector<std::vector<int>>& points) {
  return hull_zero_witness(points).has_value();
}

bool hull_contains_zero(const Spectrum& s) {
  return hull_contains_zero(s.points);
}

}  // namespace eulerhaar
