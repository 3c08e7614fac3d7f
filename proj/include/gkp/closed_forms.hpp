#pragma once

// Alternating-sum formulas for the triangle when b does not depend on n.

#include "gkp/core.hpp"

namespace gkp {

// x (x + step) ... (x + (m-1) step); 1 when m == 0.
Rational rising_factorial(const Rational& x, const Rational& step, long m);

// b == 1:
//   F(n,k) = 1 / (a1^k k!) sum_{j=0..k} (-1)^{k-j} C(k,j) prod_{r=1..n} (a0 + a1 j + r a2).
// Throws std::domain_error when a1 == 0 or k is outside [0, n].
Rational alt_sum_b1(long n, long k, const AffineWeight& a);

// b = b0 + b1 k: T(n,k) = (b0 + b1 | b1)^{(k rising)} F(n,k).
// Throws std::domain_error when a1 == 0 or b2 != 0.
Rational alt_sum_bk(long n, long k, const GkpSpec& spec);

}  // namespace gkp
