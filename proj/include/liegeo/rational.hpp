#ifndef LIEGEO_RATIONAL_HPP
#define LIEGEO_RATIONAL_HPP

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace liegeo {

// All scalar values in the workbench are exact rationals: arbitrary-precision
// numerator, positive denominator, always reduced. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Accepts an optional sign, an integer part, and an optional "/" followed by a
// positive integer: "3", "-4/7", "+0/9". Anything else yields nullopt.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form: "p/q" when q != 1, plain "p" otherwise.
std::string to_string(const Rational& q);

}  // namespace liegeo

#endif
