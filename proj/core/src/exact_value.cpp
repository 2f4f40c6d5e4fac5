#include "eulerhaar/exact_value.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace eulerhaar {

namespace {

double pi_power(int two_pow) {
  return std::pow(std::numbers::pi, 0.5 * static_cast<double>(two_pow));
}

}  // namespace

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.two_pi_pow != b.two_pi_pow) {
    throw MixedTranscendenceError(
        "cannot add exact values with pi powers " +
        format_pi_pow(a.two_pi_pow) + " and " + format_pi_pow(b.two_pi_pow));
  }
  return {a.q + b.q, a.two_pi_pow};
}

ExactValue operator-(const ExactValue& a) { return {-a.q, a.two_pi_pow}; }

ExactValue operator-(const ExactValue& a, const ExactValue& b) {
  return a + (-b);
}

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.q * b.q, a.two_pi_pow + b.two_pi_pow};
}

ExactValue operator/(const ExactValue& a, const ExactValue& b) {
  if (b.is_zero()) {
    throw std::invalid_argument("division of exact value by zero");
  }
  if (a.is_zero()) return {};
  return {a.q / b.q, a.two_pi_pow - b.two_pi_pow};
}

double to_double(const ExactValue& v) {
  return to_double(v.q) * pi_power(v.two_pi_pow);
}

std::string format_pi_pow(int two_pi_pow) {
  if (two_pi_pow % 2 == 0) {
    return std::to_string(two_pi_pow / 2);
  }
  return std::to_string(two_pi_pow) + "/2";
}

std::string format_exact(const ExactValue& v) {
  if (v.two_pi_pow == 0) {
    return format_rational(v.q);
  }
  return format_rational(v.q) + "*pi^(" + format_pi_pow(v.two_pi_pow) + ")";
}

std::complex<double> ExactComplex::to_complex() const {
  return coeff.to_complex() * pi_power(two_pi_pow);
}

ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.coeff * b.coeff, a.two_pi_pow + b.two_pi_pow};
}

void ExactSum::add(const ExactComplex& term) {
  if (term.is_zero()) return;
  auto [it, inserted] = terms_.emplace(term.two_pi_pow, term.coeff);
  if (!inserted) {
    it->second += term.coeff;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

void ExactSum::add(const ExactSum& other) {
  for (const auto& [pow, coeff] : other.terms_) {
    add(ExactComplex(coeff, pow));
  }
}

void ExactSum::scale(const RationalComplex& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [pow, coeff] : terms_) {
    coeff = coeff * factor;
  }
}

void ExactSum::scale(const ExactValue& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return;
  }
  std::map<int, RationalComplex> scaled;
  for (const auto& [pow, coeff] : terms_) {
    scaled.emplace(pow + factor.two_pi_pow,
                   coeff * RationalComplex(factor.q));
  }
  terms_ = std::move(scaled);
}

void ExactSum::scale(const ExactComplex& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return;
  }
  std::map<int, RationalComplex> scaled;
  for (const auto& [pow, coeff] : terms_) {
    scaled.emplace(pow + factor.two_pi_pow, coeff * factor.coeff);
  }
  terms_ = std::move(scaled);
}

void ExactSum::divide(const ExactValue& divisor) {
  if (divisor.is_zero()) {
    throw std::invalid_argument("division of exact sum by zero");
  }
  scale(ExactValue{Rational(1) / divisor.q, -divisor.two_pi_pow});
}

ExactComplex ExactSum::single_term() const {
  if (terms_.empty()) return {};
  if (terms_.size() != 1) {
    throw std::logic_error("exact sum has " + std::to_string(terms_.size()) +
                           " transcendence classes, expected one");
  }
  const auto& [pow, coeff] = *terms_.begin();
  return {coeff, pow};
}

std::complex<double> ExactSum::to_complex() const {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [pow, coeff] : terms_) {
    total += coeff.to_complex() * pi_power(pow);
  }
  return total;
}

std::string ExactSum::format() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [pow, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << format_rational_complex(coeff) << ")";
    if (pow != 0) {
      out << "*pi^(" << format_pi_pow(pow) << ")";
    }
  }
  return out.str();
}

}  // namespace eulerhaar
