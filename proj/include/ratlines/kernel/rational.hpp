#pragma once

#include <gmpxx.h>

#include <string>

namespace ratlines {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional sign). Throws Error(SyntaxError) on bad input.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact power with an unsigned exponent.
Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned exponent);

/// Number of bits of |z| (0 for z = 0).
std::size_t bit_length(const Integer& z);

}  // namespace ratlines
