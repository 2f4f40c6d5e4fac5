#pragma once

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

#include "eulerhaar/admissible.hpp"

namespace eulerhaar {

enum class GroupFamily { SU, Sp, G2 };

/// The pair term of the Sp Jacobian as printed in the source material,
/// xi_j^2 (1 - xi_k^2) - (1 - xi_j^2) xi_k, is dimensionally asymmetric in
/// xi_k; `squared` switches the trailing factor to xi_k^2 for sensitivity
/// checks. The printed form is the default everywhere.
enum class SpPairVariant { printed, squared };

/// Upper integration limit S(xi_1) of the inner G2 variable:
///   S(x) = sum_i poly[i] x^i + sqrt(1 - x^2) * sum_i sqrt_poly[i] x^i.
/// There is no default; the caller must choose a preset ("unit", "xi1",
/// "circle") or supply coefficients. S must map [0,1] into [0,1].
struct G2Limit {
  std::vector<Rational> poly;
  std::vector<Rational> sqrt_poly;
  std::string label;

  static G2Limit preset(const std::string& name);

  double evaluate(double xi1) const;

  /// Checks S([0,1]) stays inside [0,1] on a dense grid; throws
  /// std::invalid_argument otherwise.
  void validate() const;
};

G2Limit g2_limit_from_json(const nlohmann::json& j);
nlohmann::json g2_limit_to_json(const G2Limit& lim);

/// Which hypothesis integral to run, and over which polynomial weight.
/// Variable conventions for the attached AdmissibleFunction:
///   SU(n):  k = n(n-1)/2 x-slots (flat Euler slot order), no xi block.
///   Sp(n):  k = n^2; the first n(n-1) are the two SU x-blocks, the last n
///           are xi_1..xi_n integrated over 0 <= xi_1 <= ... <= xi_n <= 1.
///   G2:     k = 6; x_1..x_4 then xi_1, xi_2 with xi_2 in [0, S(xi_1)].
struct JacobianSpec {
  GroupFamily family = GroupFamily::SU;
  int n = 2;
  SpPairVariant sp_variant = SpPairVariant::printed;
  std::optional<G2Limit> g2_limit;

  int x_arity() const;   // total [0,1]-type variables, xi block included
  int xi_count() const;  // trailing variables integrated over the region
  int z_arity() const;

  std::string family_name() const;
};

/// Normalized weight polynomials (unspecified multiplicative constants
/// dropped; every integral is reported relative to the weight's own mass).
HalfSquarePolynomial jac_su_tilde(int n);
HalfSquarePolynomial jac_sp_tilde(int n, SpPairVariant variant);
HalfSquarePolynomial jac_g2_tilde();

HalfSquarePolynomial jacobian_polynomial(const JacobianSpec& spec);

/// Per-variable x exponents of the SU weight in flat slot order
/// (2j-1 at in-level position j).
std::vector<int> su_weight_exponents(int n);

}  // namespace eulerhaar
