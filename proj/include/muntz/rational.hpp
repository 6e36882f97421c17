#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace muntz {

using BigInt = mpz_class;
using Rational = mpq_class;

/// A point (or vector) with exact coordinates.
using Point = std::vector<Rational>;

/// Accepts "p/q", integers and decimals such as "-1.25e-3"; decimals are
/// converted exactly. Throws Error(InvalidInput) on anything else.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Shortest decimal that round-trips the nearest double. Rendering only.
std::string to_decimal(const Rational& q);

/// p/q in lowest terms. Prefer this over the two-argument constructor,
/// which does not canonicalize.
Rational frac(long p, long q);

Rational pow(const Rational& base, int exponent);

BigInt binomial(long n, long k);
BigInt factorial(long n);

Point operator+(const Point& p, const Point& q);
Point operator-(const Point& p, const Point& q);
Point operator*(const Rational& s, const Point& p);

} // namespace muntz
