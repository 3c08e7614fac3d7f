#include "gkp/closed_forms.hpp"

#include "oracles.hpp"

#include <doctest.h>

using gkp::AffineWeight;
using gkp::GkpSpec;
using gkp::Rational;

TEST_CASE("rising_factorial") {
    CHECK(gkp::rising_factorial(1, 1, 4) == 24);
    CHECK(gkp::rising_factorial(3, 2, 3) == 105);
    CHECK(gkp::rising_factorial(5, 0, 2) == 25);
    CHECK(gkp::rising_factorial(Rational(7, 3), -1, 0) == 1);
    for (long m = 0; m <= 12; ++m) CHECK(gkp::rising_factorial(1, 1, m) == Rational(gkp::factorial(m)));
    CHECK_THROWS_AS(gkp::rising_factorial(1, 1, -1), std::domain_error);
}

TEST_CASE("alt_sum_b1 examples") {
    const AffineWeight a{0, 1, 1};
    CHECK(gkp::alt_sum_b1(2, 1, a) == 4);
    CHECK(gkp::alt_sum_b1(2, 0, a) == 2);
    for (long n = 0; n <= 6; ++n) CHECK(gkp::alt_sum_b1(n, n, a) == 1);
    CHECK_THROWS_AS(gkp::alt_sum_b1(3, 1, {1, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(gkp::alt_sum_b1(3, 4, a), std::domain_error);
}

TEST_CASE("alt_sum_b1 is exact and integral on an integer grid") {
    for (long a0 = -3; a0 <= 3; ++a0) {
        for (long a1 = -3; a1 <= 3; ++a1) {
            for (long a2 = -3; a2 <= 3; ++a2) {
                if (a1 == 0 || a2 == 0) continue;
                const GkpSpec spec{{a0, a1, a2}, {1, 0, 0}};
                const auto t = gkp::triangle_by_recurrence(spec, 6);
                for (int n = 0; n <= 6; ++n) {
                    for (int k = 0; k <= n; ++k) {
                        const Rational v = gkp::alt_sum_b1(n, k, spec.a);
                        CHECK(v == t.at(n, k));
                        CHECK(gkp::is_integral(v));
                    }
                }
            }
        }
    }
}

TEST_CASE("alt_sum_b1 on the a2 = 0 boundary reproduces r-Stirling numbers") {
    // Outside the stated hypothesis; holds because (a0 + a1 j)^n inverts the
    // falling-factorial expansion just as well.
    for (long a0 = -2; a0 <= 2; ++a0) {
        for (long a1 : {-2L, -1L, 1L, 3L}) {
            const AffineWeight a{a0, a1, 0};
            for (int n = 0; n <= 6; ++n) {
                for (int k = 0; k <= n; ++k) {
                    CHECK(gkp::alt_sum_b1(n, k, a) ==
                          oracle::path_total_by_masks(n, k, a, AffineWeight{1, 0, 0}));
                }
            }
        }
    }
}

TEST_CASE("alt_sum_bk") {
    CHECK(gkp::alt_sum_bk(2, 1, {{0, 1, 1}, {1, 1, 0}}) == 8);
    const AffineWeight a{Rational(1, 2), 2, -1};
    for (int n = 0; n <= 5; ++n) {
        CHECK(gkp::alt_sum_bk(n, 0, {a, {4, 5, 0}}) == gkp::alt_sum_b1(n, 0, a));
        for (int k = 0; k <= n; ++k) CHECK(gkp::alt_sum_bk(n, k, {a, {1, 0, 0}}) == gkp::alt_sum_b1(n, k, a));
    }
    CHECK_THROWS_AS(gkp::alt_sum_bk(2, 1, {{0, 1, 1}, {1, 1, 1}}), std::domain_error);

    for (long b0 = -2; b0 <= 2; ++b0) {
        for (long b1 = -2; b1 <= 2; ++b1) {
            const GkpSpec spec{{-1, 2, 3}, {b0, b1, 0}};
            const auto t = gkp::triangle_by_recurrence(spec, 6);
            for (int n = 0; n <= 6; ++n) {
                for (int k = 0; k <= n; ++k) CHECK(gkp::alt_sum_bk(n, k, spec) == t.at(n, k));
            }
        }
    }
}
