#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "eulerhaar/euler.hpp"
#include "eulerhaar/matrix.hpp"
#include "eulerhaar/rng.hpp"

namespace eulerhaar {

struct MCEstimate {
  std::complex<double> mean{0.0, 0.0};
  double stderr_est = 0.0;  // sqrt(sum|x - mean|^2 / (M-1)) / sqrt(M)
  std::size_t samples = 0;
};

/// Haar sample on SU(n), independent of the Euler chart: complex Ginibre
/// matrix -> QR -> fix the R-diagonal phases (Haar on U(n)) -> divide by
/// det^(1/n) on the principal branch. Left-invariance of the pushforward
/// makes the branch choice irrelevant.
GroupElement sample_su_qr(int n, RandomStream& rng);

enum class SamplerKind { euler, qr };

/// Monte Carlo mean and standard error of an observable under Haar measure,
/// using either the Euler-coordinate sampler or the QR sampler.
/// Deterministic given (seed, n, samples, sampler). Requires samples >= 100.
MCEstimate mc_integrate(
    const std::function<std::complex<double>(const GroupElement&)>& eval,
    int n, std::size_t samples, SamplerKind sampler, RandomStream& rng);

/// Same, for observables written directly in Euler coordinates (the
/// coordinate sampler is the only one that can feed these).
MCEstimate mc_integrate_coords(
    const std::function<std::complex<double>(const EulerCoordinates&)>& eval,
    int n, std::size_t samples, RandomStream& rng);

}  // namespace eulerhaar
