#pragma once

#include <nlohmann/json_fwd.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "eulerhaar/rational.hpp"

namespace eulerhaar {

/// One monomial key of a polynomial in x_1..x_k and s_i = sqrt(1 - x_i^2):
/// x exponents plus an s flag per variable. Canonical form keeps every flag
/// in {0, 1}; s_i^2 is rewritten as 1 - x_i^2 during arithmetic.
struct XTermKey {
  std::vector<int> xexp;
  std::vector<std::uint8_t> sflag;

  friend auto operator<=>(const XTermKey&, const XTermKey&) = default;
};

/// Exact polynomial in x_i and sqrt(1 - x_i^2) with Gaussian-rational
/// coefficients, kept canonical (flags 0/1, no zero terms).
class HalfSquarePolynomial {
 public:
  HalfSquarePolynomial() = default;
  explicit HalfSquarePolynomial(int k) : k_(k) {}

  static HalfSquarePolynomial constant(int k, const RationalComplex& c);
  static HalfSquarePolynomial one(int k) { return constant(k, Rational(1)); }

  /// Adds coeff * x^xexp * s^sflag, canonicalizing flags >= 2 on entry.
  void add_term(const std::vector<int>& xexp, const std::vector<int>& sflag,
                const RationalComplex& coeff);

  int arity() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<XTermKey, RationalComplex>& terms() const { return terms_; }

  HalfSquarePolynomial& operator+=(const HalfSquarePolynomial& o);
  HalfSquarePolynomial operator-() const;
  friend HalfSquarePolynomial operator+(HalfSquarePolynomial a,
                                        const HalfSquarePolynomial& b) {
    a += b;
    return a;
  }
  friend HalfSquarePolynomial operator*(const HalfSquarePolynomial& a,
                                        const HalfSquarePolynomial& b);
  friend bool operator==(const HalfSquarePolynomial& a,
                         const HalfSquarePolynomial& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

  void scale(const RationalComplex& c);

  std::complex<double> evaluate(std::span<const double> x) const;

  std::string format(const std::vector<std::string>& names = {}) const;

 private:
  int k_ = 0;
  std::map<XTermKey, RationalComplex> terms_;
};

using ZExponent = std::vector<int>;

struct Spectrum {
  std::vector<ZExponent> points;  // sorted, unique
};

/// Admissible function on [0,1]^k x T^l: a finite sum of c_m(x) * z^m with
/// each coefficient a HalfSquarePolynomial. No stored coefficient is zero.
class AdmissibleFunction {
 public:
  AdmissibleFunction() = default;
  AdmissibleFunction(int k, int l) : k_(k), l_(l) {}

  int x_arity() const { return k_; }
  int z_arity() const { return l_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ZExponent, HalfSquarePolynomial>& terms() const {
    return terms_;
  }

  /// Adds c(x) * z^m; prunes if the combined coefficient cancels to zero.
  void add_term(const ZExponent& m, const HalfSquarePolynomial& coeff);

  /// Coefficient of z^m (zero polynomial when absent).
  HalfSquarePolynomial coefficient(const ZExponent& m) const;

  AdmissibleFunction& operator+=(const AdmissibleFunction& o);
  void scale(const RationalComplex& c);

  friend bool operator==(const AdmissibleFunction& a,
                         const AdmissibleFunction& b) {
    return a.k_ == b.k_ && a.l_ == b.l_ && a.terms_ == b.terms_;
  }

  std::complex<double> evaluate(std::span<const double> x,
                                std::span<const std::complex<double>> z) const;

 private:
  int k_ = 0;
  int l_ = 0;
  std::map<ZExponent, HalfSquarePolynomial> terms_;
};

/// Exact product. Throws ArityMismatchError unless arities agree.
AdmissibleFunction multiply(const AdmissibleFunction& f,
                            const AdmissibleFunction& g);

/// f^P by repeated squaring, P >= 1.
AdmissibleFunction power(const AdmissibleFunction& f, int p);

/// The set of z exponents with nonzero coefficient.
Spectrum spectrum(const AdmissibleFunction& f);

AdmissibleFunction admissible_from_json(const nlohmann::json& j);
nlohmann::json admissible_to_json(const AdmissibleFunction& f);

}  // namespace eulerhaar
