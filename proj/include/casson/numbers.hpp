#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace casson {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical reduced fraction; throws InvalidArgument on a zero denominator.
Rational make_rational(const Integer& numerator, const Integer& denominator);

bool is_integral(const Rational& r);

// Throws NonIntegral (with `what` in the message) unless r is an integer.
Integer to_integer(const Rational& r, const char* what);

// Least nonnegative residue.
Integer mod(const Integer& a, long m);
bool is_odd(const Integer& a);

// "3/4", "-2", "0".
std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

// Accepts "p/q" or "p"; throws ParseError.
Rational parse_rational(const std::string& text);

// Throws InvalidArgument when z does not fit.
std::int64_t to_int64(const Integer& z);

long gcd(long a, long b);

} // namespace casson
