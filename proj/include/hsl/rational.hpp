#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "hsl/error.hpp"

namespace hsl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "p/q" with q > 0 and gcd(p, q) = 1, including integers ("2/1").
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Compact form for text output: "2", "-1/3".
inline std::string to_display_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return to_fraction_string(r);
}

inline Rational parse_fraction(std::string_view text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer p(std::string(text.substr(0, slash)));
    Integer q(std::string(text.substr(slash + 1)));
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
}

}  // namespace hsl
