#include "eulerhaar/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerhaar {

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in rational literal: " + text);
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) {
    out << '/' << denominator(r);
  }
  return out.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::complex<double> RationalComplex::to_complex() const {
  return {to_double(re), to_double(im)};
}

std::string format_rational_complex(const RationalComplex& c) {
  if (c.im == 0) {
    return format_rational(c.re);
  }
  std::ostringstream out;
  out << format_rational(c.re);
  if (c.im > 0) {
    out << "+" << format_rational(c.im) << "i";
  } else {
    out << "-" << format_rational(-c.im) << "i";
  }
  return out.str();
}

}  // namespace eulerhaar
