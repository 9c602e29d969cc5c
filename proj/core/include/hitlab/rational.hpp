#pragma once

#include <gmpxx.h>

#include <string>

namespace hitlab {

using BigInt = mpz_class;

// Always canonical: positive denominator, reduced. Arithmetic through
// mpq_class operators keeps it that way; construct from parts with
// make_rational.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

// "num/den", with "/1" kept for integers so exact values are never
// mistaken for floats.
std::string to_fraction_string(const BigRational& q);

// Inverse of to_fraction_string; also accepts a bare integer.
BigRational parse_fraction(const std::string& text);

double to_double(const BigRational& q);

}  // namespace hitlab
