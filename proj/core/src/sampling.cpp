#include "eulerhaar/sampling.hpp"

#include <Eigen/QR>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace eulerhaar {

GroupElement sample_su_qr(int n, RandomStream& rng) {
  if (n < 2) {
    throw std::invalid_argument("sample_su_qr requires n >= 2");
  }
  ComplexMatrix g(n, n);
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      g(row, col) = rng.complex_gaussian();
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the R-diagonal phases makes Q Haar on U(n) (Mezzadri's recipe).
  for (int col = 0; col < n; ++col) {
    const std::complex<double> d = r(col, col);
    const double a = std::abs(d);
    q.col(col) *= (a == 0.0) ? 1.0 : d / a;
  }
  const std::complex<double> det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / n);
  return GroupElement(std::move(q));
}

namespace {

// Streaming mean/scatter with fixed accumulation order: identical seeds and
// configuration reproduce bit-identical estimates.
class Accumulator {
 public:
  void add(std::complex<double> x) {
    ++count_;
    sum_ += x;
    sum_sq_ += std::norm(x);
  }

  MCEstimate finish() const {
    MCEstimate est;
    est.samples = count_;
    est.mean = sum_ / static_cast<double>(count_);
    const double scatter =
        std::max(0.0, sum_sq_ - static_cast<double>(count_) * std::norm(est.mean));
    est.stderr_est = std::sqrt(scatter / static_cast<double>(count_ - 1)) /
                     std::sqrt(static_cast<double>(count_));
    return est;
  }

 private:
  std::size_t count_ = 0;
  std::complex<double> sum_{0.0, 0.0};
  double sum_sq_ = 0.0;
};

void check_samples(std::size_t samples) {
  if (samples < 100) {
    throw std::invalid_argument("mc_integrate requires at least 100 samples");
  }
}

}  // namespace

MCEstimate mc_integrate(
    const std::function<std::complex<double>(const GroupElement&)>& eval,
    int n, std::size_t samples, SamplerKind sampler, RandomStream& rng) {
  check_samples(samples);
  Accumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    if (sampler == SamplerKind::qr) {
      acc.add(eval(sample_su_qr(n, rng)));
    } else {
      acc.add(eval(to_group(sample_haar_coords(n, rng))));
    }
  }
  return acc.finish();
}

MCEstimate mc_integrate_coords(
    const std::function<std::complex<double>(const EulerCoordinates&)>& eval,
    int n, std::size_t samples, RandomStream& rng) {
  check_samples(samples);
  Accumulator acc;
  for (std::size_t i = 0; i < samples; ++i) {
    acc.add(eval(sample_haar_coords(n, rng)));
  }
  return acc.finish();
}

}  // namespace eulerhaar
