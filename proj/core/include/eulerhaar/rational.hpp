#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace eulerhaar {

// Arbitrary-precision exact arithmetic. Everything downstream of the exact
// integration pipeline (Beta/Gamma quotients, simplex-region antiderivatives,
// hull feasibility) runs on these; no floating point sneaks in.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or zero denominator.
Rational parse_rational(const std::string& text);

/// Lowest-terms "p" or "p/q" form, matching parse_rational.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

/// Gaussian rational: exact complex number with rational real/imaginary parts.
struct RationalComplex {
  Rational re{0};
  Rational im{0};

  RationalComplex() = default;
  RationalComplex(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  RationalComplex(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  RationalComplex operator-() const { return {-re, -im}; }
  RationalComplex& operator+=(const RationalComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  RationalComplex& operator-=(const RationalComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) {
    a += b;
    return a;
  }
  friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) {
    a -= b;
    return a;
  }
  friend RationalComplex operator*(const RationalComplex& a,
                                   const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const;
};

std::string format_rational_complex(const RationalComplex& c);

}  // namespace eulerhaar
