#pragma once

// Arbitrary-precision integers and rationals. GMP's mpq_class keeps values
// canonical (gcd 1, positive denominator) after every operation.

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace dsort {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr int kDefaultDecimalDigits = 12;

BigInt factorial(std::size_t n);

// "num/den", always with a denominator ("2/1").
std::string to_fraction_string(const Rational& q);

// Fixed-point rendering with `digits` places after the decimal point,
// rounded half to even.
std::string to_decimal_string(const Rational& q, int digits = kDefaultDecimalDigits);

double to_double(const Rational& q);

}  // namespace dsort
