#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pottslist {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses a decimal literal ("-0.25", "3", "1e-2", "-1/3") into an exact rational.
/// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Exact rational from a double, going through the shortest round-trip decimal
/// representation. A JSON literal "-0.1" therefore becomes exactly -1/10.
Rational rational_from_double(double value);

/// Decimal rendering when the denominator is of the form 2^a 5^b, "p/q" otherwise.
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// |a - b| <= max(abs_floor, rel * max(|a|, |b|))
bool approx_equal(double a, double b, double rel = 1e-9, double abs_floor = 1e-12);

}  // namespace pottslist
