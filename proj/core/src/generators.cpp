#include "eulerhaar/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace eulerhaar {

namespace {

int isqrt(int v) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

GeneratorIndex decompose_generator_index(int n, int i) {
  if (n < 2) {
    throw std::out_of_range("generator index requires n >= 2");
  }
  if (i < 1 || i > n * n - 1) {
    throw std::out_of_range("generator index " + std::to_string(i) +
                            " out of range 1.." + std::to_string(n * n - 1));
  }
  const int s = isqrt(i + 1);
  if (s * s == i + 1) {
    // i = (j+1)^2 - 1
    const int j = s - 1;
    return {GeneratorIndex::Kind::diagonal, j, 0, j, j + 1};
  }
  const int j = isqrt(i);
  const int k = i - j * j + 1;  // 1..2j
  const int a = (k + 1) / 2;    // ceil(k/2)
  if (k % 2 == 1) {
    return {GeneratorIndex::Kind::symmetric_pair, j, k, a, j + 1};
  }
  return {GeneratorIndex::Kind::rotation_pair, j, k, k / 2, j + 1};
}

ComplexMatrix generator(int n, int i) {
  const GeneratorIndex gi = decompose_generator_index(n, i);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  switch (gi.kind) {
    case GeneratorIndex::Kind::symmetric_pair:
      m(gi.a - 1, gi.b - 1) = kI;
      m(gi.b - 1, gi.a - 1) = kI;
      break;
    case GeneratorIndex::Kind::rotation_pair:
      m(gi.a - 1, gi.b - 1) = 1.0;
      m(gi.b - 1, gi.a - 1) = -1.0;
      break;
    case GeneratorIndex::Kind::diagonal:
      m(gi.j - 1, gi.j - 1) = kI;
      m(gi.j, gi.j) = -kI;
      break;
  }
  return m;
}

GroupElement exp_generator(int n, int i, double t) {
  const GeneratorIndex gi = decompose_generator_index(n, i);
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  switch (gi.kind) {
    case GeneratorIndex::Kind::diagonal:
      u(gi.j - 1, gi.j - 1) = std::polar(1.0, t);
      u(gi.j, gi.j) = std::polar(1.0, -t);
      break;
    case GeneratorIndex::Kind::rotation_pair: {
      const int p = gi.a - 1;
      const int q = gi.b - 1;
      const double c = std::cos(t);
      const double s = std::sin(t);
      u(p, p) = c;
      u(p, q) = s;
      u(q, p) = -s;
      u(q, q) = c;
      break;
    }
    case GeneratorIndex::Kind::symmetric_pair:
      return GroupElement(mat_exp(t * generator(n, i)));
  }
  return GroupElement(std::move(u));
}

namespace {

// Pade-13 numerator coefficients (Higham 2005).
constexpr double kPade13[] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

}  // namespace

ComplexMatrix mat_exp(const ComplexMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) {
    throw std::invalid_argument("mat_exp requires a square matrix");
  }
  if (!all_finite(m)) {
    throw std::invalid_argument("mat_exp requires finite entries");
  }

  // Scale so the Pade-13 approximant is in its accuracy region.
  const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
  constexpr double theta13 = 5.371920351148152;
  int squarings = 0;
  ComplexMatrix a = m;
  if (norm1 > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    a /= std::pow(2.0, squarings);
  }

  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  ComplexMatrix u =
      a * (a6 * (kPade13[13] * a6 + kPade13[11] * a4 + kPade13[9] * a2) +
           kPade13[7] * a6 + kPade13[5] * a4 + kPade13[3] * a2 +
           kPade13[1] * ident);
  ComplexMatrix v =
      a6 * (kPade13[12] * a6 + kPade13[10] * a4 + kPade13[8] * a2) +
      kPade13[6] * a6 + kPade13[4] * a4 + kPade13[2] * a2 + kPade13[0] * ident;

  ComplexMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int s = 0; s < squarings; ++s) {
    r = r * r;
  }
  return r;
}

}  // namespace eulerhaar
