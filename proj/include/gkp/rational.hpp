#pragma once

// Exact rational scalars. Every value in the library is an mpq_class kept in
// canonical form (positive denominator, reduced).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gkp {

using Rational = mpq_class;
using Integer = mpz_class;

// Wire format: "p" when integral, otherwise "p/q" with q > 0, no whitespace.
std::string to_string(const Rational& value);

// Accepts "p" or "p/q" (optional leading '-', q > 0). Non-reduced input is
// canonicalized. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

// r^e for a non-negative exponent.
Rational pow(const Rational& base, unsigned long exponent);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace gkp
