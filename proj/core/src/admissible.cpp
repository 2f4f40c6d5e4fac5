#include "eulerhaar/admissible.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "eulerhaar/errors.hpp"

namespace eulerhaar {

HalfSquarePolynomial HalfSquarePolynomial::constant(int k,
                                                    const RationalComplex& c) {
  HalfSquarePolynomial p(k);
  p.add_term(std::vector<int>(k, 0), std::vector<int>(k, 0), c);
  return p;
}

void HalfSquarePolynomial::add_term(const std::vector<int>& xexp,
                                    const std::vector<int>& sflag,
                                    const RationalComplex& coeff) {
  if (static_cast<int>(xexp.size()) != k_ ||
      static_cast<int>(sflag.size()) != k_) {
    throw ArityMismatchError("term arity does not match polynomial arity");
  }
  if (coeff.is_zero()) return;
  for (int e : xexp) {
    if (e < 0) throw std::invalid_argument("x exponents must be >= 0");
  }
  for (int f : sflag) {
    if (f < 0) throw std::invalid_argument("s exponents must be >= 0");
  }
  // Canonicalize: each s_i^2 becomes (1 - x_i^2), splitting the term.
  struct Pending {
    std::vector<int> xexp;
    std::vector<std::uint8_t> sflag;
    RationalComplex coeff;
  };
  std::vector<Pending> work;
  {
    Pending start;
    start.xexp = xexp;
    start.sflag.assign(k_, 0);
    start.coeff = coeff;
    work.push_back(std::move(start));
    for (int var = 0; var < k_; ++var) {
      int squares = sflag[var] / 2;
      const std::uint8_t residue = static_cast<std::uint8_t>(sflag[var] % 2);
      for (auto& p : work) {
        p.sflag[var] = residue;
      }
      for (int rep = 0; rep < squares; ++rep) {
        std::vector<Pending> next;
        next.reserve(2 * work.size());
        for (const auto& p : work) {
          next.push_back(p);  // * 1
          Pending minus = p;  // * (-x^2)
          minus.xexp[var] += 2;
          minus.coeff = -minus.coeff;
          next.push_back(std::move(minus));
        }
        work = std::move(next);
      }
    }
  }
  for (auto& p : work) {
    XTermKey key{std::move(p.xexp), std::move(p.sflag)};
    auto [it, inserted] = terms_.emplace(std::move(key), p.coeff);
    if (!inserted) {
      it->second += p.coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

HalfSquarePolynomial& HalfSquarePolynomial::operator+=(
    const HalfSquarePolynomial& o) {
  if (k_ != o.k_) throw ArityMismatchError("polynomial arities differ");
  for (const auto& [key, coeff] : o.terms_) {
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

HalfSquarePolynomial HalfSquarePolynomial::operator-() const {
  HalfSquarePolynomial r(k_);
  for (const auto& [key, coeff] : terms_) {
    r.terms_.emplace(key, -coeff);
  }
  return r;
}

HalfSquarePolynomial operator*(const HalfSquarePolynomial& a,
                               const HalfSquarePolynomial& b) {
  if (a.k_ != b.k_) throw ArityMismatchError("polynomial arities differ");
  HalfSquarePolynomial r(a.k_);
  std::vector<int> xexp(a.k_);
  std::vector<int> sflag(a.k_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (int v = 0; v < a.k_; ++v) {
        xexp[v] = ka.xexp[v] + kb.xexp[v];
        sflag[v] = ka.sflag[v] + kb.sflag[v];
      }
      r.add_term(xexp, sflag, ca * cb);
    }
  }
  return r;
}

void HalfSquarePolynomial::scale(const RationalComplex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [key, coeff] : terms_) {
    coeff = coeff * c;
  }
}

std::complex<double> HalfSquarePolynomial::evaluate(
    std::span<const double> x) const {
  if (static_cast<int>(x.size()) != k_) {
    throw ArityMismatchError("evaluation point arity mismatch");
  }
  std::complex<double> total{0.0, 0.0};
  for (const auto& [key, coeff] : terms_) {
    double mag = 1.0;
    for (int v = 0; v < k_; ++v) {
      for (int e = 0; e < key.xexp[v]; ++e) mag *= x[v];
      if (key.sflag[v]) mag *= std::sqrt(std::max(0.0, 1.0 - x[v] * x[v]));
    }
    total += coeff.to_complex() * mag;
  }
  return total;
}

std::string HalfSquarePolynomial::format(
    const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int v) {
    if (v < static_cast<int>(names.size())) return names[v];
    return "x" + std::to_string(v + 1);
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << format_rational_complex(coeff) << ")";
    for (int v = 0; v < k_; ++v) {
      if (key.xexp[v] > 0) {
        out << "*" << var_name(v);
        if (key.xexp[v] > 1) out << "^" << key.xexp[v];
      }
      if (key.sflag[v]) {
        out << "*sqrt(1-" << var_name(v) << "^2)";
      }
    }
  }
  return out.str();
}

void AdmissibleFunction::add_term(const ZExponent& m,
                                  const HalfSquarePolynomial& coeff) {
  if (static_cast<int>(m.size()) != l_) {
    throw ArityMismatchError("z exponent arity mismatch");
  }
  if (coeff.arity() != k_) {
    throw ArityMismatchError("coefficient x arity mismatch");
  }
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

HalfSquarePolynomial AdmissibleFunction::coefficient(const ZExponent& m) const {
  auto it = terms_.find(m);
  if (it == terms_.end()) return HalfSquarePolynomial(k_);
  return it->second;
}

AdmissibleFunction& AdmissibleFunction::operator+=(const AdmissibleFunction& o) {
  if (k_ != o.k_ || l_ != o.l_) {
    throw ArityMismatchError("admissible function arities differ");
  }
  for (const auto& [m, coeff] : o.terms_) {
    add_term(m, coeff);
  }
  return *this;
}

void AdmissibleFunction::scale(const RationalComplex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [m, coeff] : terms_) {
    coeff.scale(c);
  }
}

std::complex<double> AdmissibleFunction::evaluate(
    std::span<const double> x, std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != l_) {
    throw ArityMismatchError("z point arity mismatch");
  }
  std::complex<double> total{0.0, 0.0};
  for (const auto& [m, coeff] : terms_) {
    std::complex<double> zp{1.0, 0.0};
    for (int v = 0; v < l_; ++v) {
      const int e = m[v];
      for (int i = 0; i < std::abs(e); ++i) {
        zp = e > 0 ? zp * z[v] : zp / z[v];
      }
    }
    total += coeff.evaluate(x) * zp;
  }
  return total;
}

AdmissibleFunction multiply(const AdmissibleFunction& f,
                            const AdmissibleFunction& g) {
  if (f.x_arity() != g.x_arity() || f.z_arity() != g.z_arity()) {
    throw ArityMismatchError("admissible function arities differ");
  }
  AdmissibleFunction r(f.x_arity(), f.z_arity());
  ZExponent m(f.z_arity());
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      for (int v = 0; v < f.z_arity(); ++v) {
        m[v] = mf[v] + mg[v];
      }
      r.add_term(m, cf * cg);
    }
  }
  return r;
}

AdmissibleFunction power(const AdmissibleFunction& f, int p) {
  if (p < 1) {
    throw std::invalid_argument("power requires P >= 1");
  }
  AdmissibleFunction base = f;
  AdmissibleFunction result;
  bool have_result = false;
  while (p > 0) {
    if (p & 1) {
      result = have_result ? multiply(result, base) : base;
      have_result = true;
    }
    p >>= 1;
    if (p > 0) base = multiply(base, base);
  }
  return result;
}

Spectrum spectrum(const AdmissibleFunction& f) {
  Spectrum s;
  s.points.reserve(f.term_count());
  for (const auto& [m, coeff] : f.terms()) {
    s.points.push_back(m);  // map order: already sorted and unique
  }
  return s;
}

AdmissibleFunction admissible_from_json(const nlohmann::json& j) {
  const int k = j.at("k").get<int>();
  const int l = j.at("l").get<int>();
  AdmissibleFunction f(k, l);
  for (const auto& tj : j.at("terms")) {
    const auto m = tj.at("m").get<std::vector<int>>();
    HalfSquarePolynomial coeff(k);
    for (const auto& cj : tj.at("coeff")) {
      const auto xexp = cj.at("xexp").get<std::vector<int>>();
      const auto sflags = cj.at("sflags").get<std::vector<int>>();
      RationalComplex c;
      c.re = parse_rational(cj.at("re").get<std::string>());
      c.im = parse_rational(cj.at("im").get<std::string>());
      coeff.add_term(xexp, sflags, c);
    }
    f.add_term(m, coeff);
  }
  return f;
}

nlohmann::json admissible_to_json(const AdmissibleFunction& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, coeff] : f.terms()) {
    nlohmann::json cj = nlohmann::json::array();
    for (const auto& [key, c] : coeff.terms()) {
      cj.push_back({{"xexp", key.xexp},
                    {"sflags", std::vector<int>(key.sflag.begin(), key.sflag.end())},
                    {"re", format_rational(c.re)},
                    {"im", format_rational(c.im)}});
    }
    terms.push_back({{"m", m}, {"coeff", std::move(cj)}});
  }
  return {{"k", f.x_arity()}, {"l", f.z_arity()}, {"terms", std::move(terms)}};
}

}  // namespace eulerhaar
