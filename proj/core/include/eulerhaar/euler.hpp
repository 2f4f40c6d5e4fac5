#pragma once

#include <vector>

#include "eulerhaar/matrix.hpp"
#include "eulerhaar/rational.hpp"
#include "eulerhaar/rng.hpp"

namespace eulerhaar {

/// Coordinates of the recursive Euler chart on SU(n):
///   phi, psi each of length n(n-1)/2, omega of length n-1,
///   phi_i in [0, pi), psi_i in [0, pi/2], omega_i in [0, 2*pi).
///
/// Slot layout (the one canonical index table -- everything else derives
/// from it): the chart is a tower of levels m = n, n-1, ..., 2. Level m
/// owns m-1 consecutive phi/psi slots starting at flat offset
/// level_offset(n, m) = n(n-1)/2 - m(m-1)/2, plus the single omega slot
/// omega[m-2]. Within level m, in-level position j = 1..m-1 carries the
/// Haar weight 2*sin^(2j-1)(psi)*cos(psi).
struct EulerCoordinates {
  int n = 0;
  std::vector<double> phi;
  std::vector<double> psi;
  std::vector<double> omega;

  EulerCoordinates() = default;
  EulerCoordinates(int n_, std::vector<double> phi_, std::vector<double> psi_,
                   std::vector<double> omega_);

  /// Throws std::invalid_argument on bad lengths or out-of-range entries.
  void validate() const;
};

int coordinate_pair_count(int n);        // n(n-1)/2
int level_offset(int n, int level);      // flat start of a level's slots

/// In-level position (1-based j) of flat psi slot `index`; the Haar density
/// exponent at that slot is 2j-1.
struct PsiSlot {
  int level;  // 2..n
  int j;      // 1..level-1
};
std::vector<PsiSlot> psi_slot_table(int n);

/// The Euler chart map into SU(n). All-zero coordinates give the identity.
GroupElement to_group(const EulerCoordinates& c);

/// Unnormalized Haar density in Euler coordinates: the product of
/// 2*sin^(2j-1)(psi)*cos(psi) over all n(n-1)/2 slots per the slot table.
double jacobian_weight(const EulerCoordinates& c);

/// Draws Euler coordinates distributed by the Haar factorization:
/// phi ~ U[0,pi), omega ~ U[0,2pi), psi at in-level position j by inverse
/// CDF psi = arcsin(u^(1/(2j))). Draw order: all phi ascending, all psi
/// ascending, all omega ascending.
EulerCoordinates sample_haar_coords(int n, RandomStream& rng);

/// Closed-form inverse of the n=2 chart on its open interior.
/// Throws ChartBoundaryError when |g_11| is 0 or 1 (measure-zero set).
EulerCoordinates invert_su2(const GroupElement& g);

/// The (n-1)x(n-1) linear system that forces every torus exponent of a
/// finite-type monomial to vanish. Row 1 is (1, 0, ..., 0); row i >= 2 has
/// -1/2 on the subdiagonal, 3/4 on the diagonal and -1/2^(c-i+2) at
/// column c > i.
struct ConstraintMatrix {
  int n = 0;
  std::vector<std::vector<Rational>> entries;
};

ConstraintMatrix constraint_matrix(int n);

/// Exact determinant by rational Gaussian elimination.
Rational constraint_matrix_det(const ConstraintMatrix& a);

}  // namespace eulerhaar
