#pragma once

#include <gmpxx.h>

#include <string>

namespace fpd {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(int n, int k);

// Accepts "a/b", integers, plain decimals ("0.25") and scientific
// notation ("1e-9"); the result is exact and canonicalized.
Rational parse_rational(const std::string& text);

// Fixed-point decimal rendering with `digits` places after the point,
// rounding half away from zero. digits = 0 renders an integer.
std::string format_rational_decimal(const Rational& value, int digits);

}  // namespace fpd
