#pragma once

// Weak compositions (c_0, ..., c_k) of n-k and the bijections
//
//   A = increasing k-subsets of [n]      (NE abscissas, sigma)
//   B = increasing (n-k)-subsets of [n]  (E abscissas, sigma tilde)
//   C = weak compositions of n-k into k+1 parts
//
// c_i counts the East steps taken at height i.

#include "gkp/core.hpp"
#include "gkp/lattice_paths.hpp"

#include <vector>

namespace gkp {

struct WeakComposition {
    std::vector<long> parts;  // c_0 .. c_k
    long n = 0;
    long k = 0;

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
};

bool is_valid(const WeakComposition& c);

// "1,0,2"
std::string to_string(const WeakComposition& c);

// Visits each composition once. Order is descending lexicographic on the
// parts, which makes the i-th composition correspond to the i-th path of
// for_each_path(n, k).
template <typename Fn>
void for_each_weak_composition(long n, long k, Fn&& fn) {
    detail::check_domain(n, k);
    WeakComposition c{std::vector<long>(static_cast<std::size_t>(k + 1), 0), n, k};
    c.parts[0] = n - k;
    while (true) {
        fn(static_cast<const WeakComposition&>(c));
        long i = k - 1;
        while (i >= 0 && c.parts[i] == 0) --i;
        if (i < 0) return;
        long carry = 1;
        for (long j = i + 1; j <= k; ++j) {
            carry += c.parts[j];
            c.parts[j] = 0;
        }
        --c.parts[i];
        c.parts[i + 1] = carry;
    }
}

std::vector<WeakComposition> enumerate_weak_compositions(long n, long k);

// sigma_i = i + c_0 + ... + c_{i-1}
IncreasingSeq comp_to_sigma(const WeakComposition& c);

// c_i = #{ j : st_j - j = i }, with k = st.ambient - |st|.
WeakComposition sigma_tilde_to_comp(const IncreasingSeq& st);

// Inverse of sigma_tilde_to_comp: the first c_0 entries are l, the next c_1
// entries are l+1, and so on.
IncreasingSeq comp_to_sigma_tilde(const WeakComposition& c);

// beta(st) = prod_j (a0 + (st_j - j) a1)
Rational weight_beta(const IncreasingSeq& st, const Rational& a0, const Rational& a1);

// delta(c) = prod_i (a0 + i a1)^{c_i}
Rational weight_delta(const WeakComposition& c, const Rational& a0, const Rational& a1);

// Requires spec.a.c2 == 0 (std::domain_error otherwise). Sum over weak
// compositions of a0^{c_0} prod_{i=1..k} (a0 + a1 i)^{c_i}
// (b0 + (b1 + b2) i + b2 (c_0 + ... + c_{i-1})).
Rational closed_form_a2zero(long n, long k, const GkpSpec& spec);

// Fully general form: sum over 1 <= p_1 < ... < p_{n-k} <= n of
// prod_i ((a2 + a1) p_i - a1 i + a0)
//   * prod_{i=1..k} (b0 + (b1 + b2) i + b2 sum_{j<i} #{l : p_l - l = j}).
Rational closed_form_general(long n, long k, const GkpSpec& spec);

}  // namespace gkp
