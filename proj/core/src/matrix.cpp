#include "eulerhaar/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eulerhaar {

double unitarity_defect(const ComplexMatrix& u) {
  ComplexMatrix gram = u.adjoint() * u;
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

double determinant_defect(const ComplexMatrix& u) {
  return std::abs(u.determinant() - std::complex<double>(1.0, 0.0));
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

GroupElement::GroupElement(ComplexMatrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() < 1) {
    throw std::invalid_argument("group element must be a square matrix");
  }
  if (!all_finite(u_)) {
    throw std::invalid_argument("group element has non-finite entries");
  }
  const double ud = unitarity_defect(u_);
  if (ud > kGroupTol) {
    throw std::invalid_argument("matrix is not unitary: defect " +
                                std::to_string(ud));
  }
  const double dd = determinant_defect(u_);
  if (dd > kGroupTol) {
    throw std::invalid_argument("matrix determinant is not 1: defect " +
                                std::to_string(dd));
  }
}

}  // namespace eulerhaar
