#include "eulerhaar/euler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "eulerhaar/errors.hpp"

namespace eulerhaar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

void check_range(const std::vector<double>& v, double lo, double hi,
                 const char* name) {
  for (double x : v) {
    if (!(x >= lo && x <= hi)) {
      throw std::invalid_argument(std::string(name) + " entry " +
                                  std::to_string(x) + " outside [" +
                                  std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    }
  }
}

// U := U * diag(..., e^{it} at row p, e^{-it} at row p+1, ...)
void apply_phase_pair(ComplexMatrix& u, int p, double t) {
  const std::complex<double> e = std::polar(1.0, t);
  u.col(p) *= e;
  u.col(p + 1) *= std::conj(e);
}

// U := U * R where R is the rotation [[cos, sin], [-sin, cos]] in plane (p, p+1).
void apply_rotation_pair(ComplexMatrix& u, int p, double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  const Eigen::VectorXcd colp = u.col(p);
  const Eigen::VectorXcd colq = u.col(p + 1);
  u.col(p) = c * colp - s * colq;
  u.col(p + 1) = s * colp + c * colq;
}

// Right-multiplies u by the level-m chart factor tower:
//   A(2)..A(m) * blockdiag(inner chart, 1) * omega phase.
// phi/psi/omega point at the level's slot ranges within the flat arrays.
void apply_chart(ComplexMatrix& u, const double* phi, const double* psi,
                 const double* omega, int m) {
  if (m < 2) return;
  for (int k = 2; k <= m; ++k) {
    apply_phase_pair(u, k - 2, phi[k - 2]);
    apply_rotation_pair(u, k - 2, psi[k - 2]);
  }
  apply_chart(u, phi + (m - 1), psi + (m - 1), omega, m - 1);
  apply_phase_pair(u, m - 2, omega[m - 2]);
}

}  // namespace

EulerCoordinates::EulerCoordinates(int n_, std::vector<double> phi_,
                                   std::vector<double> psi_,
                                   std::vector<double> omega_)
    : n(n_), phi(std::move(phi_)), psi(std::move(psi_)), omega(std::move(omega_)) {
  validate();
}

void EulerCoordinates::validate() const {
  if (n < 2) {
    throw std::invalid_argument("Euler coordinates require n >= 2");
  }
  const std::size_t pairs = static_cast<std::size_t>(coordinate_pair_count(n));
  if (phi.size() != pairs || psi.size() != pairs ||
      omega.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("Euler coordinate lengths do not match n");
  }
  check_range(phi, 0.0, kPi, "phi");  // [0, pi); pi itself rejected below
  for (double x : phi) {
    if (x == kPi) throw std::invalid_argument("phi must lie in [0, pi)");
  }
  check_range(psi, 0.0, kHalfPi, "psi");
  check_range(omega, 0.0, kTwoPi, "omega");
  for (double x : omega) {
    if (x == kTwoPi) throw std::invalid_argument("omega must lie in [0, 2pi)");
  }
}

int coordinate_pair_count(int n) { return n * (n - 1) / 2; }

int level_offset(int n, int level) {
  return coordinate_pair_count(n) - coordinate_pair_count(level);
}

std::vector<PsiSlot> psi_slot_table(int n) {
  std::vector<PsiSlot> table(coordinate_pair_count(n));
  for (int level = n; level >= 2; --level) {
    const int off = level_offset(n, level);
    for (int j = 1; j <= level - 1; ++j) {
      table[off + j - 1] = PsiSlot{level, j};
    }
  }
  return table;
}

GroupElement to_group(const EulerCoordinates& c) {
  c.validate();
  ComplexMatrix u = ComplexMatrix::Identity(c.n, c.n);
  apply_chart(u, c.phi.data(), c.psi.data(), c.omega.data(), c.n);
  return GroupElement(std::move(u));
}

double jacobian_weight(const EulerCoordinates& c) {
  c.validate();
  double w = 1.0;
  const auto table = psi_slot_table(c.n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double s = std::sin(c.psi[i]);
    const double cs = std::cos(c.psi[i]);
    double pw = s;
    for (int e = 1; e < 2 * table[i].j - 1; ++e) pw *= s;
    w *= 2.0 * pw * cs;
  }
  return w;
}

EulerCoordinates sample_haar_coords(int n, RandomStream& rng) {
  if (n < 2) {
    throw std::invalid_argument("sample_haar_coords requires n >= 2");
  }
  const int pairs = coordinate_pair_count(n);
  EulerCoordinates c;
  c.n = n;
  c.phi.reserve(pairs);
  c.psi.reserve(pairs);
  c.omega.reserve(n - 1);
  for (int i = 0; i < pairs; ++i) {
    c.phi.push_back(rng.uniform(0.0, kPi));
  }
  const auto table = psi_slot_table(n);
  for (int i = 0; i < pairs; ++i) {
    // CDF sin^(2j) on [0, pi/2]
    const double u = rng.uniform();
    c.psi.push_back(std::asin(std::pow(u, 1.0 / (2.0 * table[i].j))));
  }
  for (int i = 0; i < n - 1; ++i) {
    c.omega.push_back(rng.uniform(0.0, kTwoPi));
  }
  return c;
}

EulerCoordinates invert_su2(const GroupElement& g) {
  if (g.dim() != 2) {
    throw std::invalid_argument("invert_su2 requires a 2x2 group element");
  }
  const std::complex<double> g11 = g.entry(0, 0);
  const std::complex<double> g12 = g.entry(0, 1);
  const double r = std::abs(g11);
  if (r < 1e-14 || r > 1.0 - 1e-14) {
    throw ChartBoundaryError("|g11| on the chart boundary (psi in {0, pi/2})");
  }
  // g11 = e^{i(phi+omega)} cos(psi), g12 = e^{i(phi-omega)} sin(psi)
  const double psi = std::atan2(std::abs(g12), r);
  double sum = std::arg(g11);   // phi + omega  (mod 2pi)
  double diff = std::arg(g12);  // phi - omega  (mod 2pi)
  if (sum < 0) sum += kTwoPi;
  if (diff < 0) diff += kTwoPi;
  double phi = std::fmod(sum + diff, kTwoPi) / 2.0;  // in [0, pi)
  double omega = sum - phi;
  if (omega < 0) omega += kTwoPi;
  if (omega >= kTwoPi) omega -= kTwoPi;
  return EulerCoordinates(2, {phi}, {psi}, {omega});
}

ConstraintMatrix constraint_matrix(int n) {
  if (n < 2) {
    throw std::invalid_argument("constraint_matrix requires n >= 2");
  }
  const int d = n - 1;
  ConstraintMatrix a;
  a.n = n;
  a.entries.assign(d, std::vector<Rational>(d, Rational(0)));
  a.entries[0][0] = 1;
  for (int r = 1; r < d; ++r) {
    a.entries[r][r - 1] = Rational(-1, 2);
    a.entries[r][r] = Rational(3, 4);
    for (int c = r + 1; c < d; ++c) {
      // tail entry -1/2^(c-r+2): -1/8, -1/16, ...
      a.entries[r][c] = -Rational(1, BigInt(1) << (c - r + 2));
    }
  }
  return a;
}

Rational constraint_matrix_det(const ConstraintMatrix& a) {
  auto m = a.entries;
  const std::size_t d = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    if (pivot == d) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < d; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < d; ++c) {
        m[r][c] -= f * m[col][c];
      }
    }
  }
  return det;
}

}  // namespace eulerhaar
