#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace elect {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with a positive
// denominator by the backend. Every score, quota and support value in this
// library is one of these; no floating point ever decides a comparison.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q" with the denominator always spelled out ("16000/1", "-3/2").
std::string fraction_string(const Rational& r);

// Exact fixed-point rendering with `places` digits after the decimal point,
// rounding half away from zero ("10750.00", "583.33").
std::string decimal_string(const Rational& r, int places = 2);

// Accepts "p/q" or a plain integer "p". Returns nothing on malformed input
// (including q == 0).
std::optional<Rational> parse_fraction(const std::string& text);

// floor(r) as a big integer (works for negative values too).
BigInt floor_rational(const Rational& r);

}  // namespace elect
