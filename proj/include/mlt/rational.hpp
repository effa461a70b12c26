#pragma once

// Exact rational scalar used throughout the library.
//
// Rational is GMP's mpq_class. Every value handed out by this library is kept
// in lowest terms with a positive denominator; values built from a raw
// numerator/denominator pair must go through make_rational().

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mlt {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Parses "n", "-n", "+n" or "p/q" (optionally signed). Throws Error(ParseError).
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1. Never a decimal.
std::string to_string(const Rational& r);

// Fixed-point decimal with `digits` fractional digits, rounded half away from
// zero using integer arithmetic only.
std::string to_decimal(const Rational& r, int digits);

bool is_integer(const Rational& r);
// True iff 2r is an integer.
bool is_half_integer_multiple(const Rational& r);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

Rational abs_of(const Rational& r);

// Conversion for loop bounds; throws Error(InternalInconsistency) on overflow.
std::int64_t to_int64(const Integer& z);

}  // namespace mlt
