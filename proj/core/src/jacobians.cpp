#include "eulerhaar/jacobians.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

#include "eulerhaar/euler.hpp"

namespace eulerhaar {

G2Limit G2Limit::preset(const std::string& name) {
  G2Limit lim;
  lim.label = name;
  if (name == "unit") {
    lim.poly = {Rational(1)};
  } else if (name == "xi1") {
    lim.poly = {Rational(0), Rational(1)};
  } else if (name == "circle") {
    lim.sqrt_poly = {Rational(1)};
  } else {
    throw std::invalid_argument("unknown G2 limit preset: " + name +
                                " (expected unit, xi1 or circle)");
  }
  return lim;
}

double G2Limit::evaluate(double xi1) const {
  auto horner = [xi1](const std::vector<Rational>& c) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = acc * xi1 + to_double(*it);
    }
    return acc;
  };
  double v = horner(poly);
  if (!sqrt_poly.empty()) {
    v += std::sqrt(std::max(0.0, 1.0 - xi1 * xi1)) * horner(sqrt_poly);
  }
  return v;
}

void G2Limit::validate() const {
  if (poly.empty() && sqrt_poly.empty()) {
    throw std::invalid_argument("G2 limit has no coefficients");
  }
  constexpr int kGrid = 2048;
  for (int i = 0; i <= kGrid; ++i) {
    const double x = static_cast<double>(i) / kGrid;
    const double s = evaluate(x);
    if (!(s >= -1e-12 && s <= 1.0 + 1e-12)) {
      throw std::invalid_argument("G2 limit leaves [0,1] at xi1=" +
                                  std::to_string(x));
    }
  }
}

G2Limit g2_limit_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    return G2Limit::preset(j.get<std::string>());
  }
  G2Limit lim;
  if (j.contains("preset")) {
    return G2Limit::preset(j.at("preset").get<std::string>());
  }
  if (j.contains("poly")) {
    for (const auto& c : j.at("poly")) {
      lim.poly.push_back(parse_rational(c.get<std::string>()));
    }
  }
  if (j.contains("sqrt_poly")) {
    for (const auto& c : j.at("sqrt_poly")) {
      lim.sqrt_poly.push_back(parse_rational(c.get<std::string>()));
    }
  }
  lim.label = j.value("label", "custom");
  lim.validate();
  return lim;
}

nlohmann::json g2_limit_to_json(const G2Limit& lim) {
  nlohmann::json pj = nlohmann::json::array();
  for (const auto& c : lim.poly) pj.push_back(format_rational(c));
  nlohmann::json sj = nlohmann::json::array();
  for (const auto& c : lim.sqrt_poly) sj.push_back(format_rational(c));
  return {{"label", lim.label}, {"poly", pj}, {"sqrt_poly", sj}};
}

int JacobianSpec::x_arity() const {
  switch (family) {
    case GroupFamily::SU:
      return n * (n - 1) / 2;
    case GroupFamily::Sp:
      return n * n;
    case GroupFamily::G2:
      return 6;
  }
  return 0;
}

int JacobianSpec::xi_count() const {
  switch (family) {
    case GroupFamily::SU:
      return 0;
    case GroupFamily::Sp:
      return n;
    case GroupFamily::G2:
      return 2;
  }
  return 0;
}

int JacobianSpec::z_arity() const {
  switch (family) {
    case GroupFamily::SU:
      return n * (n + 1) / 2 - 1;
    case GroupFamily::Sp:
      return n * (n + 1);
    case GroupFamily::G2:
      return 8;
  }
  return 0;
}

std::string JacobianSpec::family_name() const {
  switch (family) {
    case GroupFamily::SU:
      return "su";
    case GroupFamily::Sp:
      return "sp";
    case GroupFamily::G2:
      return "g2";
  }
  return "?";
}

std::vector<int> su_weight_exponents(int n) {
  const auto table = psi_slot_table(n);
  std::vector<int> exps(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    exps[i] = 2 * table[i].j - 1;
  }
  return exps;
}

HalfSquarePolynomial jac_su_tilde(int n) {
  if (n < 1) {
    throw std::invalid_argument("jac_su_tilde requires n >= 1");
  }
  if (n == 1) {
    return HalfSquarePolynomial::one(0);
  }
  const std::vector<int> exps = su_weight_exponents(n);
  const int k = static_cast<int>(exps.size());
  HalfSquarePolynomial p(k);
  p.add_term(exps, std::vector<int>(k, 0), RationalComplex(Rational(1)));
  return p;
}

namespace {

// Single monomial helper in a k-variable flag-free polynomial.
HalfSquarePolynomial monomial(int k, const std::vector<int>& xexp,
                              const Rational& c) {
  HalfSquarePolynomial p(k);
  p.add_term(xexp, std::vector<int>(k, 0), RationalComplex(c));
  return p;
}

}  // namespace

HalfSquarePolynomial jac_sp_tilde(int n, SpPairVariant variant) {
  if (n < 1) {
    throw std::invalid_argument("jac_sp_tilde requires n >= 1");
  }
  const int su_block = n * (n - 1) / 2;
  const int k = n * n;  // two x-blocks then xi_1..xi_n
  const int xi0 = 2 * su_block;

  auto embed_su = [&](int offset) {
    HalfSquarePolynomial p(k);
    std::vector<int> xexp(k, 0);
    if (n >= 2) {
      const auto exps = su_weight_exponents(n);
      for (int i = 0; i < su_block; ++i) xexp[offset + i] = exps[i];
    }
    p.add_term(xexp, std::vector<int>(k, 0), RationalComplex(Rational(1)));
    return p;
  };

  HalfSquarePolynomial result = embed_su(0) * embed_su(su_block);

  {
    std::vector<int> xexp(k, 0);
    for (int j = 0; j < n; ++j) xexp[xi0 + j] = 1;
    result = result * monomial(k, xexp, Rational(1));
  }

  // Pair factors over 1 <= k' < j' <= n:
  //   xi_j^2 (1 - xi_k^2) - (1 - xi_j^2) xi_k^e,  e = 1 (printed) or 2.
  const int tail = variant == SpPairVariant::printed ? 1 : 2;
  for (int jj = 2; jj <= n; ++jj) {
    for (int kk = 1; kk < jj; ++kk) {
      HalfSquarePolynomial factor(k);
      std::vector<int> e(k, 0);
      const int vj = xi0 + jj - 1;
      const int vk = xi0 + kk - 1;
      e[vj] = 2;
      factor.add_term(e, std::vector<int>(k, 0), RationalComplex(Rational(1)));
      e[vk] = 2;
      factor.add_term(e, std::vector<int>(k, 0), RationalComplex(Rational(-1)));
      std::fill(e.begin(), e.end(), 0);
      e[vk] = tail;
      factor.add_term(e, std::vector<int>(k, 0), RationalComplex(Rational(-1)));
      e[vj] = 2;
      factor.add_term(e, std::vector<int>(k, 0), RationalComplex(Rational(1)));
      result = result * factor;
    }
  }
  return result;
}

HalfSquarePolynomial jac_g2_tilde() {
  // Variables: x1..x4, xi1, xi2.
  constexpr int k = 6;
  constexpr int xi1 = 4;
  constexpr int xi2 = 5;

  auto mono = [&](std::initializer_list<std::pair<int, int>> exps,
                  const Rational& c) {
    std::vector<int> e(k, 0);
    for (const auto& [var, ex] : exps) e[var] = ex;
    return monomial(k, e, c);
  };

  // q := 1 - xi2^2
  const HalfSquarePolynomial q =
      mono({}, Rational(1)) + mono({{xi2, 2}}, Rational(-1));
  const HalfSquarePolynomial q2 = q * q;
  const HalfSquarePolynomial q3 = q2 * q;

  // xi1^2 * (16 q^3 + 9 q - 24 q^2)
  HalfSquarePolynomial inner(k);
  {
    HalfSquarePolynomial comb(k);
    comb += q3;
    comb.scale(RationalComplex(Rational(16)));
    HalfSquarePolynomial t9 = q;
    t9.scale(RationalComplex(Rational(9)));
    HalfSquarePolynomial t24 = q2;
    t24.scale(RationalComplex(Rational(-24)));
    comb += t9;
    comb += t24;
    inner = mono({{xi1, 2}}, Rational(1)) * comb;
  }
  // - (1 - xi1^2) * (3 xi2 - 4 xi2^2)^2
  {
    const HalfSquarePolynomial lin =
        mono({{xi2, 1}}, Rational(3)) + mono({{xi2, 2}}, Rational(-4));
    HalfSquarePolynomial term =
        (mono({}, Rational(1)) + mono({{xi1, 2}}, Rational(-1))) * (lin * lin);
    term.scale(RationalComplex(Rational(-1)));
    inner += term;
  }

  // xi1^2 (1 - xi2^2) - (1 - xi1^2) xi2^2
  const HalfSquarePolynomial second =
      mono({{xi1, 2}}, Rational(1)) * q +
      (mono({}, Rational(1)) + mono({{xi1, 2}}, Rational(-1))) *
          mono({{xi2, 2}}, Rational(-1));

  return mono({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {xi1, 1}, {xi2, 1}},
              Rational(1)) *
         inner * second;
}

HalfSquarePolynomial jacobian_polynomial(const JacobianSpec& spec) {
  switch (spec.family) {
    case GroupFamily::SU:
      return jac_su_tilde(spec.n);
    case GroupFamily::Sp:
      return jac_sp_tilde(spec.n, spec.sp_variant);
    case GroupFamily::G2:
      return jac_g2_tilde();
  }
  throw std::logic_error("unreachable jacobian family");
}

}  // namespace eulerhaar
