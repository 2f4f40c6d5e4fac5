#pragma once

#include <Eigen/Dense>

#include <complex>

namespace eulerhaar {

using ComplexMatrix = Eigen::MatrixXcd;

/// Entrywise max |.| of U^dagger U - I; zero for an exactly unitary matrix.
double unitarity_defect(const ComplexMatrix& u);

/// |det(U) - 1|.
double determinant_defect(const ComplexMatrix& u);

bool all_finite(const ComplexMatrix& m);

/// Tolerance on the special-unitary invariants. Leaves double-precision
/// headroom for products of ~N^2 elementary factors.
inline constexpr double kGroupTol = 1e-12;

/// An N x N special-unitary matrix. Construction verifies
/// unitarity_defect <= kGroupTol and determinant_defect <= kGroupTol and
/// throws std::invalid_argument otherwise, so a GroupElement in hand is
/// always a valid group element.
class GroupElement {
 public:
  explicit GroupElement(ComplexMatrix u);

  const ComplexMatrix& matrix() const { return u_; }
  int dim() const { return static_cast<int>(u_.rows()); }

  std::complex<double> entry(int row, int col) const { return u_(row, col); }

 private:
  ComplexMatrix u_;
};

}  // namespace eulerhaar
