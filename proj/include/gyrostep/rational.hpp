#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gyro {

// Exact arbitrary-precision rational. Breakpoints, measures and epsilons all
// live here so that every strict-inequality test is decisive.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", plain integers, and finite decimals ("0.25" parses to 1/4
// exactly). Throws parse_error on anything else.
Rational parse_rational(std::string_view text);

// Reduced form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

double rational_to_double(const Rational& value);

}  // namespace gyro
