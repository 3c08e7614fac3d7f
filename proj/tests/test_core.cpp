#include "gkp/core.hpp"

#include "oracles.hpp"

#include <doctest.h>

using gkp::AffineWeight;
using gkp::GkpSpec;
using gkp::Rational;

TEST_CASE("rational wire format") {
    CHECK(gkp::to_string(Rational(3)) == "3");
    CHECK(gkp::to_string(Rational(-6) / 4) == "-3/2");
    CHECK(gkp::parse_rational("-3/2") == Rational(-3, 2));
    CHECK(gkp::parse_rational("4/2") == 2);
    CHECK(gkp::to_string(gkp::parse_rational("4/2")) == "2");
    CHECK(gkp::parse_rational("0") == 0);
    for (const char* bad : {"", "-", "1/0", "1/-2", " 1", "1 ", "1.5", "1/", "/2", "--1", "+1"}) {
        CHECK_THROWS_AS(gkp::parse_rational(bad), std::invalid_argument);
    }
}

TEST_CASE("eval_weight") {
    CHECK(gkp::eval_weight({1, 1, 0}, 3, 2) == 3);
    CHECK(gkp::eval_weight({0, -1, 1}, 5, 2) == 3);
    CHECK(gkp::eval_weight({Rational(1, 2), 0, Rational(1, 2)}, 3, 0) == 2);
    CHECK(gkp::eval_weight({1, 1, 1}, -4, -2) == -5);
}

TEST_CASE("parse_affine") {
    CHECK(gkp::parse_affine("0,-1,1/2") == AffineWeight{0, -1, Rational(1, 2)});
    CHECK_THROWS_AS(gkp::parse_affine("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(gkp::parse_affine("1,2,3,4"), std::invalid_argument);
    CHECK_THROWS_AS(gkp::parse_affine("1,,3"), std::invalid_argument);
}

TEST_CASE("triangle_by_recurrence reproduces classical triangles") {
    SUBCASE("binomial") {
        const auto t = gkp::triangle_by_recurrence({{1, 0, 0}, {1, 0, 0}}, 4);
        const std::vector<Rational> row4{1, 4, 6, 4, 1};
        CHECK(std::vector<Rational>(t.row(4).begin(), t.row(4).end()) == row4);
        for (int n = 0; n <= 4; ++n) {
            for (int k = 0; k <= n; ++k) CHECK(t.at(n, k) == Rational(gkp::binomial(n, k)));
        }
    }
    SUBCASE("Stirling second kind against set partitions") {
        const auto t = gkp::triangle_by_recurrence({{0, 1, 0}, {1, 0, 0}}, 7);
        CHECK(t.at(4, 2) == 7);
        for (int n = 0; n <= 7; ++n) {
            for (int k = 0; k <= n; ++k) CHECK(t.at(n, k) == oracle::stirling2_by_partitions(n, k));
        }
    }
    SUBCASE("Eulerian against permutation descents") {
        const GkpSpec eulerian{{1, 1, 0}, {0, -1, 1}};
        const auto t = gkp::triangle_by_recurrence(eulerian, 7);
        for (int n = 1; n <= 7; ++n) {
            for (int k = 0; k < n; ++k) CHECK(t.at(n, k) == oracle::eulerian_by_permutations(n, k));
        }
        CHECK(gkp::row_sum(t, 4) == 24);
    }
}

TEST_CASE("n_max = 0 is the single entry 1") {
    const auto t = gkp::triangle_by_recurrence({{5, -2, 7}, {Rational(1, 3), 0, 9}}, 0);
    CHECK(t.n_max() == 0);
    CHECK(t.rows() == std::vector<std::vector<Rational>>{{1}});
    CHECK(gkp::row_sum(t, 0) == 1);
}

TEST_CASE("triangle access outside the stored range") {
    const auto t = gkp::triangle_by_recurrence({{1, 0, 0}, {1, 0, 0}}, 5);
    CHECK(gkp::row_sum(t, 5) == 32);
    CHECK(t.at(3, -1) == 0);
    CHECK(t.at(3, 4) == 0);
    CHECK_THROWS_AS(t.at(6, 0), std::out_of_range);
    CHECK_THROWS_AS(gkp::row_sum(t, 6), std::out_of_range);
    CHECK_THROWS_AS(gkp::Triangle(std::vector<std::vector<Rational>>{{2}}), std::invalid_argument);
    CHECK_THROWS_AS(gkp::Triangle(std::vector<std::vector<Rational>>{{1}, {1}}), std::invalid_argument);
}

TEST_CASE("edge columns are products of boundary weights") {
    const GkpSpec spec{{Rational(1, 2), -3, 2}, {-1, Rational(2, 3), 1}};
    const auto t = gkp::triangle_by_recurrence(spec, 8);
    Rational left = 1;
    Rational diag = 1;
    for (long n = 1; n <= 8; ++n) {
        left *= spec.a(n, 0);
        diag *= spec.b(n, n);
        CHECK(t.at(n, 0) == left);
        CHECK(t.at(n, n) == diag);
    }
}

TEST_CASE("recurrence equals mask-enumerated path weight on a rational spec grid") {
    const std::vector<Rational> values{-2, Rational(-1, 2), 0, 1, Rational(5, 3)};
    int specs = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            const GkpSpec spec{{values[i], values[j], values[(i + j) % 5]},
                               {values[(i * 2 + 1) % 5], values[(j + 3) % 5], values[(i + 2 * j) % 5]}};
            const auto t = gkp::triangle_by_recurrence(spec, 6);
            for (int n = 0; n <= 6; ++n) {
                for (int k = 0; k <= n; ++k) {
                    CHECK(t.at(n, k) == oracle::path_total_by_masks(n, k, spec.a, spec.b));
                }
            }
            ++specs;
        }
    }
    CHECK(specs == 25);
}
