#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mis {

/// Exact unbounded integer used for MIS counts and integer bounds.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational used for certified interval endpoints.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-2/7", "0.125", "1e-8" or "2.5E+3" into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// 10^-digits as an exact rational.
Rational decimal_unit(unsigned digits);

/// Decimal rendering rounded toward -inf (floor) or +inf (ceil) at `digits`
/// fractional digits.
std::string to_decimal_floor(const Rational& x, unsigned digits);
std::string to_decimal_ceil(const Rational& x, unsigned digits);

/// Integer power of a rational; exponent zero gives 1.
Rational pow(const Rational& base, unsigned exponent);

BigCount pow_int(unsigned base, unsigned exponent);

} // namespace mis
