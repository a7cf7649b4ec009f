#ifndef ODRA_RATIONAL_HPP
#define ODRA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace odra {

/// Arbitrary-precision exact rational; the coefficient domain for all
/// symbolic and concrete probability arithmetic.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "3", "-2/24", "0.04", "1e-7" style literals into an exact rational.
/// Decimal literals are read exactly (0.04 == 1/25), never through a double.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Renders as "n" or "n/d" (canonical form, d > 0).
std::string to_string(const Rational& value);

/// Decimal rendering with the given number of significant digits,
/// e.g. rational_to_decimal(1/625, 12) == "0.00160000000000".
std::string rational_to_decimal(const Rational& value, int significant_digits);

/// Nearest double (for simulation and reporting only; analysis stays exact).
double to_double(const Rational& value);

}  // namespace odra

#endif  // ODRA_RATIONAL_HPP
