#pragma once

// r-Eulerian numbers B^{(r)}(n,k) counting descents of r-Stirling
// permutations, their marked variant, the explicit sums for both, and
// brute-force permutation oracles.
//
// A word over {1^m, ..., n^m} is an m-Stirling permutation when every letter
// strictly between two copies of i is >= i.

#include "gkp/core.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace gkp {

struct StirlingPerm {
    std::vector<int> word;
    int m = 1;
    int n = 0;

    friend bool operator==(const StirlingPerm&, const StirlingPerm&) = default;
};

// Checks the multiset and the Stirling property directly.
bool is_stirling(const StirlingPerm& p);

std::string to_string(const StirlingPerm& p);

// |Q_{m,n}| = prod_{i=0..n-1} (m i + 1)
Integer stirling_perm_count(int m, int n);

namespace detail {
template <typename Fn>
void insert_next_letter(StirlingPerm& p, int letter, Fn& fn) {
    if (letter > p.n) {
        fn(static_cast<const StirlingPerm&>(p));
        return;
    }
    // The copies of the largest letter are always adjacent, so every valid
    // word arises from exactly one gap of a smaller valid word.
    const std::size_t gaps = p.word.size() + 1;
    for (std::size_t g = 0; g < gaps; ++g) {
        p.word.insert(p.word.begin() + static_cast<long>(g), static_cast<std::size_t>(p.m), letter);
        insert_next_letter(p, letter + 1, fn);
        p.word.erase(p.word.begin() + static_cast<long>(g),
                     p.word.begin() + static_cast<long>(g) + p.m);
    }
}
}  // namespace detail

// Visits each element of Q_{m,n} once by gap insertion of the block m^(j+1)
// into words of Q_{m,j}.
template <typename Fn>
void for_each_stirling_perm(int m, int n, Fn&& fn) {
    if (m < 1 || n < 0) throw std::domain_error("require m >= 1 and n >= 0");
    StirlingPerm p{{}, m, n};
    p.word.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    detail::insert_next_letter(p, 1, fn);
}

std::vector<StirlingPerm> enumerate_stirling_perms(int m, int n);

// Independent generator: all multiset permutations filtered by is_stirling.
// Sorted lexicographically. Only for tiny m*n.
std::vector<StirlingPerm> enumerate_stirling_perms_by_filter(int m, int n);

// #{ j : word[j] > word[j+1] }, plus one when include_final is set (the
// convention that also counts the last position).
long descent_count(const StirlingPerm& p, bool include_final);

std::map<long, std::uint64_t> descent_histogram(int m, int n, bool include_final);

struct EulerianTriangleB {
    long r = 1;
    Triangle triangle;
};

// B(n,k) = (r n - k + 1 - r) B(n-1,k-1) + (k+1) B(n-1,k), B(n,0) = 1.
// Row n >= 1 has B(n,n) = 0.
EulerianTriangleB b_triangle(long r, std::size_t n_max);

// Builds G(n,k) = B(n+1,k) through the generic recurrence with
// a = (1,1,0), b = (1,-1,r) and reads B(n,k) = G(n-1,k).
EulerianTriangleB b_triangle_via_G(long r, std::size_t n_max);

GkpSpec b_shift_spec(long r);

// Sum over t_1 + ... + t_{k+1} = n-k-1 of
//   1^{t_1} 2^{t_2} ... (k+1)^{t_{k+1}} prod_{i=1..k} (r (t_1 + ... + t_i) + i (r-1) + 1).
// Requires n >= 1 and 0 <= k < n.
Rational b_explicit(long r, long n, long k);

// M(n,k) = r^{n-k} B(n,k).
Triangle marked_triangle(long r, std::size_t n_max);

// [(n-1) r - k + 1] M(n-1,k-1) + r (k+1) M(n-1,k) - M(n,k); requires n >= 1.
Rational marked_residual(const Triangle& m, long r, long n, long k);

// Sum over c_0 + ... + c_k = n-k of
//   r^{n-k} prod_{i=1..k} (1+i)^{c_i} ((r-1)(i-1) + r (c_0 + ... + c_{i-1})).
// Requires n >= 1 and 0 <= k <= n.
Rational marked_explicit(long r, long n, long k);

}  // namespace gkp
