#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logalg {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &r);
std::string to_string(const Integer &z);

// Accepts "p", "-p", "p/q". Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational &r);

// Correctly rounded to roughly the long double mantissa; mpq_get_d only gives a double.
long double to_long_double(const Rational &r);
long double to_long_double(const Integer &z);

Rational pow(const Rational &base, long exponent);

} // namespace logalg
