#pragma once

#include <gmpxx.h>

#include <string>

namespace indel {

// Arbitrary-precision values; every finite bound is computed in these.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

// Full decimal digit string, no exponent notation.
std::string to_decimal(const ExactInt& value);
std::string to_decimal(const ExactRational& value);

ExactInt floor(const ExactRational& value);

ExactInt ipow(unsigned long base, unsigned long exponent);

// Rational with denominator 1, or numerator/denominator reduced to canonical form.
ExactRational make_rational(const ExactInt& numerator, const ExactInt& denominator = 1);

}  // namespace indel
