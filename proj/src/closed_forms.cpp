#include "gkp/closed_forms.hpp"

#include "gkp/lattice_paths.hpp"

namespace gkp {

Rational rising_factorial(const Rational& x, const Rational& step, long m) {
    if (m < 0) throw std::domain_error("rising_factorial requires m >= 0");
    Rational out = 1;
    for (long i = 0; i < m; ++i) out *= x + step * i;
    return out;
}

Rational alt_sum_b1(long n, long k, const AffineWeight& a) {
    if (a.c1 == 0) throw std::domain_error("alt_sum_b1 requires a1 != 0");
    detail::check_domain(n, k);
    Rational sum = 0;
    for (long j = 0; j <= k; ++j) {
        Rational prod = Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
        for (long r = 1; r <= n; ++r) prod *= a.c0 + a.c1 * j + a.c2 * r;
        if ((k - j) % 2 == 0) {
            sum += prod;
        } else {
            sum -= prod;
        }
    }
    return sum / (pow(a.c1, static_cast<unsigned long>(k)) *
                  Rational(factorial(static_cast<unsigned long>(k))));
}

Rational alt_sum_bk(long n, long k, const GkpSpec& spec) {
    if (spec.b.c2 != 0) throw std::domain_error("alt_sum_bk requires b2 = 0");
    return rising_factorial(spec.b.c0 + spec.b.c1, spec.b.c1, k) * alt_sum_b1(n, k, spec.a);
}

}  // namespace gkp
