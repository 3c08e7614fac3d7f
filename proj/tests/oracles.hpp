#pragma once

// Independent brute-force oracles. Nothing here calls into the library's
// enumeration or formula code.

#include "gkp/rational.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// Number of set partitions of [n] into exactly k blocks, by walking every
// restricted growth string.
inline long stirling2_by_partitions(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    long count = 0;
    while (true) {
        const int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks == k) ++count;
        int i = n - 1;
        while (i > 0) {
            const int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= prefix_max) break;
            rgs[i] = 0;
            --i;
        }
        if (i == 0) return count;
        ++rgs[i];
    }
}

// Permutations of [n] with exactly k internal descents.
inline long eulerian_by_permutations(int n, int k) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    long count = 0;
    do {
        int d = 0;
        for (int i = 0; i + 1 < n; ++i) d += p[i] > p[i + 1];
        if (d == k) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// Total weight of E/NE paths to (n,k) by scanning all n-bit masks; bit i set
// means step i+1 is North-East. Weights are taken at the destination node.
template <typename WeightA, typename WeightB>
gkp::Rational path_total_by_masks(int n, int k, WeightA a, WeightB b) {
    gkp::Rational total = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        gkp::Rational w = 1;
        int height = 0;
        for (int i = 1; i <= n; ++i) {
            if (mask & (1u << (i - 1))) {
                ++height;
                w *= b(i, height);
            } else {
                w *= a(i, height);
            }
        }
        total += w;
    }
    return total;
}

}  // namespace oracle
