#include "eulerhaar/finite_type.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include "eulerhaar/errors.hpp"

namespace eulerhaar {

ExactValue gamma_half(int two_z) {
  if (two_z <= 0) {
    throw std::invalid_argument("gamma_half requires positive argument");
  }
  // Recurse Gamma(z) = (z-1) * Gamma(z-1) down to Gamma(1) or Gamma(1/2).
  Rational q(1);
  int t = two_z;
  while (t > 2) {
    t -= 2;
    q *= Rational(t, 2);
  }
  if (t == 2) {
    return {q, 0};  // Gamma(1) = 1
  }
  return {q, 1};  // Gamma(1/2) = sqrt(pi)
}

ExactValue beta_x(int a, int s) {
  if (a < 0 || s < 0) {
    throw std::invalid_argument("beta_x requires nonnegative exponents");
  }
  // (1/2) * Gamma((a+1)/2) * Gamma((s+2)/2) / Gamma((a+s+3)/2)
  ExactValue v = gamma_half(a + 1) * gamma_half(s + 2) / gamma_half(a + s + 3);
  return ExactValue{Rational(1, 2)} * v;
}

ExactValue beta_half(int m, int nn, int j) {
  if (j < 1) {
    throw std::invalid_argument("beta_half requires j >= 1");
  }
  return beta_x(m + 2 * j - 1, nn);
}

void FiniteTypeMonomial::validate() const {
  if (n < 2) {
    throw std::invalid_argument("monomial requires n >= 2");
  }
  if (levels.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("monomial must have n-1 levels");
  }
  for (int idx = 0; idx < n - 1; ++idx) {
    const int m = n - idx;  // levels[idx] describes SU(m)
    const auto& lv = levels[idx];
    const auto arity = static_cast<std::size_t>(m - 1);
    if (lv.k.size() != arity || lv.sin_exp.size() != arity ||
        lv.cos_exp.size() != arity) {
      throw std::invalid_argument("level " + std::to_string(idx) +
                                  " arity does not match SU(" +
                                  std::to_string(m) + ")");
    }
    for (std::size_t i = 0; i < arity; ++i) {
      if (lv.sin_exp[i] < 0 || lv.cos_exp[i] < 0) {
        throw std::invalid_argument("sine/cosine exponents must be >= 0");
      }
    }
  }
}

bool FiniteTypeMonomial::all_torus_exponents_zero() const {
  for (const auto& lv : levels) {
    if (lv.l != 0) return false;
    for (int k : lv.k) {
      if (k != 0) return false;
    }
  }
  return true;
}

ExactComplex haar_integral(const FiniteTypeMonomial& f) {
  f.validate();
  if (!f.all_torus_exponents_zero()) {
    return {};  // a nonzero phi or omega exponent kills the integral
  }
  ExactValue ratio{Rational(1)};
  for (int idx = 0; idx < f.n - 1; ++idx) {
    const auto& lv = f.levels[idx];
    for (std::size_t i = 0; i < lv.k.size(); ++i) {
      const int j = static_cast<int>(i) + 1;
      ratio = ratio * beta_half(lv.sin_exp[i], lv.cos_exp[i], j) /
              beta_half(0, 0, j);
    }
  }
  return ExactComplex{f.c} * ExactComplex{ratio};
}

std::complex<double> evaluate_at(const FiniteTypeMonomial& f,
                                 const EulerCoordinates& coords) {
  f.validate();
  if (coords.n != f.n) {
    throw ArityMismatchError("monomial dimension " + std::to_string(f.n) +
                             " does not match coordinates for SU(" +
                             std::to_string(coords.n) + ")");
  }
  auto int_pow = [](double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  double phase = 0.0;  // accumulate all torus exponents into one angle
  double magnitude = 1.0;
  for (int idx = 0; idx < f.n - 1; ++idx) {
    const int m = f.n - idx;
    const int off = level_offset(f.n, m);
    const auto& lv = f.levels[idx];
    for (std::size_t i = 0; i < lv.k.size(); ++i) {
      const std::size_t slot = off + i;
      phase += lv.k[i] * coords.phi[slot];
      magnitude *= int_pow(std::sin(coords.psi[slot]), lv.sin_exp[i]);
      magnitude *= int_pow(std::cos(coords.psi[slot]), lv.cos_exp[i]);
    }
    phase += lv.l * coords.omega[m - 2];
  }
  return f.c.to_complex() * std::polar(magnitude, phase);
}

FiniteTypeMonomial monomial_from_json(const nlohmann::json& j) {
  FiniteTypeMonomial f;
  f.n = j.at("n").get<int>();
  for (const auto& lj : j.at("levels")) {
    MonomialLevel lv;
    lv.k = lj.at("k").get<std::vector<int>>();
    lv.sin_exp = lj.at("m").get<std::vector<int>>();
    lv.cos_exp = lj.at("nn").get<std::vector<int>>();
    lv.l = lj.at("l").get<int>();
    f.levels.push_back(std::move(lv));
  }
  if (j.contains("c")) {
    f.c.re = parse_rational(j.at("c").at("re").get<std::string>());
    f.c.im = parse_rational(j.at("c").at("im").get<std::string>());
  }
  f.validate();
  return f;
}

nlohmann::json monomial_to_json(const FiniteTypeMonomial& f) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lv : f.levels) {
    levels.push_back({{"k", lv.k},
                      {"m", lv.sin_exp},
                      {"nn", lv.cos_exp},
                      {"l", lv.l}});
  }
  return {{"n", f.n},
          {"levels", std::move(levels)},
          {"c",
           {{"re", format_rational(f.c.re)}, {"im", format_rational(f.c.im)}}}};
}

}  // namespace eulerhaar
