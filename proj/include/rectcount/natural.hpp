#pragma once

#include <gmpxx.h>

#include <string>

namespace rectcount {

// All exact counts are GMP integers.  Values named Natural are non-negative
// by construction; subtraction only appears where the result is provably
// non-negative (e.g. q(n) = p(n) - p(n-1)).
using Natural = mpz_class;

// Exact fractions, kept canonical: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;

// ln(v) for v >= 1, computed from the binary mantissa/exponent pair, so the
// relative error stays at double rounding level for values with thousands of
// digits.
double log_natural(const Natural& v);

double log10_natural(const Natural& v);

std::string to_decimal(const Natural& v);
Natural natural_from_decimal(const std::string& s);

Rational make_rational(long num, unsigned long den);

}  // namespace rectcount
