#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weil {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept canonical: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1.
using Rational = mpq_class;

/// Canonical num/den. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// q rounded to the nearest multiple of 10^-digits, as a plain decimal.
std::string to_fixed(const Rational& q, int digits);

/// Accepts "p", "p/q" and plain decimals such as "-1.25" or "3e-4".
/// Throws ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Number of bits of |z| (0 for zero).
long bit_length(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// 2^e as a rational (e may be negative).
Rational pow2(long e);

/// Largest k/2^bits <= q and smallest k/2^bits >= q.
Rational floor_dyadic(const Rational& q, long bits);
Rational ceil_dyadic(const Rational& q, long bits);

/// Rational enclosures of sqrt(q) for q >= 0, absolute error <= 2^-bits.
Rational sqrt_lower(const Rational& q, long bits);
Rational sqrt_upper(const Rational& q, long bits);

/// Floor of log2|q| for q != 0 (exact).
long floor_log2(const Rational& q);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline Integer abs(const Integer& z) { return z < 0 ? Integer(-z) : z; }

}  // namespace weil
