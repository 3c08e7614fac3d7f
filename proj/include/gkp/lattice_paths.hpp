#pragma once

// E/NE lattice paths from (0,0) to (n,k) and their weights.
//
// Weight convention: the step that ENTERS node (i,j) carries the weight.
// An East step (i-1,j) -> (i,j) weighs a(i,j); a North-East step
// (i-1,j-1) -> (i,j) weighs b(i,j). Shifting either index by one silently
// breaks every identity in this library.

#include "gkp/core.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkp {

enum class Step : std::uint8_t { E = 0, NE = 1 };

struct LatticePath {
    std::vector<Step> steps;

    long n() const { return static_cast<long>(steps.size()); }
    long k() const { return static_cast<long>(std::count(steps.begin(), steps.end(), Step::NE)); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

// Strictly increasing values in [1..ambient].
struct IncreasingSeq {
    std::vector<long> values;
    long ambient = 0;

    friend bool operator==(const IncreasingSeq&, const IncreasingSeq&) = default;
};

bool is_valid(const IncreasingSeq& s);

// "E NE NE E"
std::string to_string(const LatticePath& p);
// "2,3,5"; empty sequence renders as ""
std::string to_string(const IncreasingSeq& s);

namespace detail {
inline void check_domain(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::domain_error("require 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    }
}
}  // namespace detail

// Visits every path of R(n,k) once, in lexicographic order of the step
// strings with E < NE.
template <typename Fn>
void for_each_path(long n, long k, Fn&& fn) {
    detail::check_domain(n, k);
    LatticePath path;
    path.steps.assign(static_cast<std::size_t>(n - k), Step::E);
    path.steps.insert(path.steps.end(), static_cast<std::size_t>(k), Step::NE);
    do {
        fn(static_cast<const LatticePath&>(path));
    } while (std::next_permutation(path.steps.begin(), path.steps.end()));
}

// Visits every strictly increasing sequence of `length` values in [1..n],
// in lexicographic order.
template <typename Fn>
void for_each_increasing(long n, long length, Fn&& fn) {
    detail::check_domain(n, length);
    std::vector<long> v(static_cast<std::size_t>(length));
    for (long i = 0; i < length; ++i) v[i] = i + 1;
    while (true) {
        fn(std::span<const long>(v));
        long i = length - 1;
        while (i >= 0 && v[i] == n - length + i + 1) --i;
        if (i < 0) return;
        ++v[i];
        for (long j = i + 1; j < length; ++j) v[j] = v[j - 1] + 1;
    }
}

std::vector<LatticePath> enumerate_paths(long n, long k);

Rational path_weight(const LatticePath& p, const GkpSpec& spec);

// Brute-force total weight of R(n,k); the reference oracle.
Rational total_weight_paths(long n, long k, const GkpSpec& spec);

// sigma(i) = 1-based abscissa of the i-th NE step.
IncreasingSeq sigma_of_path(const LatticePath& p);
LatticePath path_of_sigma(const IncreasingSeq& s);

// Complement of s in [1..s.ambient].
IncreasingSeq sigma_tilde(const IncreasingSeq& s);

// Sum over sigma in C(k,n) of  prod_i a(st_i, st_i - i) * prod_i b(sigma_i, i),
// with st = sigma_tilde(sigma); no path objects are built.
Rational explicit_sum_paths(long n, long k, const GkpSpec& spec);

// b == 1 specialization: sum over 1 <= p_1 < ... < p_{n-k} <= n of
// prod_i ((a2 + a1) p_i - a1 i + a0).
Rational explicit_sum_b1(long n, long k, const AffineWeight& a);

}  // namespace gkp
