#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wci {

// All invariant arithmetic is exact. Weights and degrees stay in 64 bits;
// products (volumes, bound formulas) are promoted to arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^exp for integer exp of any sign (base != 0 when exp < 0).
Rational rational_pow(const Rational& base, long exp);

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& value);

// Accepts "p" or "p/q" with optional sign; rejects q == 0 and garbage.
std::optional<Rational> parse_rational(std::string_view text);

} // namespace wci
