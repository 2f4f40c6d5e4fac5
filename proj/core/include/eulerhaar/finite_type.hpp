#pragma once

#include <nlohmann/json_fwd.hpp>

#include <complex>
#include <vector>

#include "eulerhaar/euler.hpp"
#include "eulerhaar/exact_value.hpp"

namespace eulerhaar {

/// Gamma(z) for positive integer or half-integer z = two_z/2, exactly:
/// a rational times an optional factor sqrt(pi).
ExactValue gamma_half(int two_z);

/// Exact value of the one-variable weight integral
///   integral_0^1 x^a (1 - x^2)^(s/2) dx
/// for a, s >= 0, via the Beta/Gamma quotient.
ExactValue beta_x(int a, int s);

/// Exact value of integral_0^1 x^(m + 2j - 1) (1 - x^2)^(nn/2) dx,
/// the per-slot factor of a monomial Haar integral at in-level position j.
ExactValue beta_half(int m, int nn, int j);

/// One recursion level of a finite-type monomial on SU(m): per-slot torus
/// exponent k_i, sine exponent m_i, cosine exponent n_i (arrays of length
/// m-1), and the single omega exponent l for this level.
struct MonomialLevel {
  std::vector<int> k;
  std::vector<int> sin_exp;
  std::vector<int> cos_exp;
  int l = 0;
};

/// Finite-type monomial on SU(n) in Euler coordinates: levels[0] is the
/// outermost level (SU(n)), levels.back() is SU(2); slot i of level m reads
/// the flat coordinate at level_offset(n, m) + i.
struct FiniteTypeMonomial {
  int n = 0;
  std::vector<MonomialLevel> levels;
  RationalComplex c{Rational(1)};

  /// Throws std::invalid_argument on level-count/arity mismatches or
  /// negative sine/cosine exponents.
  void validate() const;

  bool all_torus_exponents_zero() const;
};

/// Normalized Haar integral I(f)/I(1): zero unless every k and every l
/// exponent vanishes, otherwise c times the product over slots of
/// beta_half(m_i, n_i, j) / beta_half(0, 0, j).
ExactComplex haar_integral(const FiniteTypeMonomial& f);

/// Pointwise evaluation at Euler coordinates. Throws ArityMismatchError
/// when dimensions disagree.
std::complex<double> evaluate_at(const FiniteTypeMonomial& f,
                                 const EulerCoordinates& coords);

FiniteTypeMonomial monomial_from_json(const nlohmann::json& j);
nlohmann::json monomial_to_json(const FiniteTypeMonomial& f);

}  // namespace eulerhaar
