#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace crn {

// Exact arbitrary-precision arithmetic. All coefficient math in the engine
// goes through these types; there is no floating point anywhere in the core.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonicalized rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" (optionally signed). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Renders as "p" or "p/q" (lowest terms, sign on the numerator).
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

// q^e for e >= 0.
Rational pow(const Rational& q, unsigned long e);

// gcd of two rationals: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2).
// Arguments may be negative; the result is non-negative. gcd(0, x) = |x|.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace crn
