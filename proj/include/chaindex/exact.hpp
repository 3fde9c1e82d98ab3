#pragma once

// Exact scalar types. Every invariant computed by the library is either an
// arbitrary-precision integer or a reduced rational.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace chaindex {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced p/q. Throws std::domain_error on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q" with q > 1, or plain "p" for integers.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Inverse of to_string. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// Round half away from zero to `digits` decimal places, e.g. 95/3 -> "31.67".
std::string to_fixed(const Rational& r, unsigned digits);

/// Integer power base^exp as a rational (exp may be negative for nonzero base).
Rational rational_pow(const Rational& base, long exp);
BigInt bigint_pow(long base, unsigned long exp);

}  // namespace chaindex
