#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace overconv {

/// Exact arbitrary-precision rational. Always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& r);

/// Inverse of to_string; also accepts surrounding whitespace. Throws ParseError.
Rational parse_rational(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Floor and ceiling as big integers.
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// Integer power q^k as a big integer, k >= 0.
BigInt ipow(std::int64_t base, unsigned exponent);

}  // namespace overconv
