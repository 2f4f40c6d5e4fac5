#pragma once

#include <map>
#include <string>

#include "eulerhaar/errors.hpp"
#include "eulerhaar/rational.hpp"

namespace eulerhaar {

/// Exact number of the form q * pi^(two_pi_pow/2) with rational q.
///
/// Canonical form: q == 0 forces two_pi_pow == 0. Addition requires equal
/// pi powers (or a zero operand); mixing powers throws
/// MixedTranscendenceError -- callers that need sums across powers use
/// ExactSum below.
struct ExactValue {
  Rational q{0};
  int two_pi_pow{0};  // pi exponent in halves: value = q * pi^(two_pi_pow/2)

  ExactValue() = default;
  ExactValue(Rational value, int two_pow = 0)  // NOLINT(google-explicit-constructor)
      : q(std::move(value)), two_pi_pow(q == 0 ? 0 : two_pow) {}

  bool is_zero() const { return q == 0; }

  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.q == b.q && a.two_pi_pow == b.two_pi_pow;
  }
};

ExactValue operator+(const ExactValue& a, const ExactValue& b);
ExactValue operator-(const ExactValue& a);
ExactValue operator-(const ExactValue& a, const ExactValue& b);
ExactValue operator*(const ExactValue& a, const ExactValue& b);
ExactValue operator/(const ExactValue& a, const ExactValue& b);

double to_double(const ExactValue& v);

/// "q" for pi^0, otherwise "q*pi^(p)" with p printed as an integer or "r/2".
std::string format_exact(const ExactValue& v);

/// Formats the pi exponent alone ("0", "1", "-1/2", ...).
std::string format_pi_pow(int two_pi_pow);

/// Complex exact value: coeff * pi^(two_pi_pow/2). Same canonical-zero rule.
struct ExactComplex {
  RationalComplex coeff;
  int two_pi_pow{0};

  ExactComplex() = default;
  ExactComplex(RationalComplex c, int two_pow = 0)  // NOLINT(google-explicit-constructor)
      : coeff(std::move(c)), two_pi_pow(coeff.is_zero() ? 0 : two_pow) {}
  ExactComplex(const ExactValue& v) : ExactComplex(RationalComplex(v.q), v.two_pi_pow) {}  // NOLINT

  bool is_zero() const { return coeff.is_zero(); }

  std::complex<double> to_complex() const;

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.coeff == b.coeff && a.two_pi_pow == b.two_pi_pow;
  }
};

ExactComplex operator*(const ExactComplex& a, const ExactComplex& b);

/// Finite sum of exact complex values, one coefficient per pi power.
/// This is the closure of ExactValue under addition: terms with distinct
/// transcendence classes stay separate, so a zero test is exact.
class ExactSum {
 public:
  ExactSum() = default;

  static ExactSum zero() { return {}; }

  void add(const ExactComplex& term);
  void add(const ExactSum& other);
  void scale(const RationalComplex& factor);
  void scale(const ExactValue& factor);
  void scale(const ExactComplex& factor);
  /// Divides every term by a single exact value. The divisor must be nonzero.
  void divide(const ExactValue& divisor);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Single-term access; throws std::logic_error unless term_count() == 1.
  ExactComplex single_term() const;

  const std::map<int, RationalComplex>& terms() const { return terms_; }

  std::complex<double> to_complex() const;
  std::string format() const;

  friend bool operator==(const ExactSum& a, const ExactSum& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::map<int, RationalComplex> terms_;  // two_pi_pow -> coefficient, no zeros
};

}  // namespace eulerhaar
