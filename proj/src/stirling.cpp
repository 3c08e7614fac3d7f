#include "gkp/stirling.hpp"

#include "gkp/compositions.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkp {

bool is_stirling(const StirlingPerm& p) {
    if (p.m < 1 || p.n < 0) return false;
    if (p.word.size() != static_cast<std::size_t>(p.m) * static_cast<std::size_t>(p.n)) return false;
    std::vector<int> seen(static_cast<std::size_t>(p.n) + 1, 0);
    for (int v : p.word) {
        if (v < 1 || v > p.n) return false;
        ++seen[v];
    }
    for (int i = 1; i <= p.n; ++i) {
        if (seen[i] != p.m) return false;
    }
    const std::size_t len = p.word.size();
    for (std::size_t u = 0; u < len; ++u) {
        for (std::size_t w = u + 2; w < len; ++w) {
            if (p.word[u] != p.word[w]) continue;
            for (std::size_t v = u + 1; v < w; ++v) {
                if (p.word[v] < p.word[u]) return false;
            }
        }
    }
    return true;
}

std::string to_string(const StirlingPerm& p) {
    std::string out;
    const bool wide = p.n >= 10;
    for (int v : p.word) {
        if (wide && !out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

Integer stirling_perm_count(int m, int n) {
    Integer out = 1;
    for (int i = 0; i < n; ++i) out *= m * i + 1;
    return out;
}

std::vector<StirlingPerm> enumerate_stirling_perms(int m, int n) {
    std::vector<StirlingPerm> out;
    for_each_stirling_perm(m, n, [&](const StirlingPerm& p) { out.push_back(p); });
    return out;
}

std::vector<StirlingPerm> enumerate_stirling_perms_by_filter(int m, int n) {
    if (m < 1 || n < 0) throw std::domain_error("require m >= 1 and n >= 0");
    StirlingPerm p{{}, m, n};
    for (int i = 1; i <= n; ++i) p.word.insert(p.word.end(), static_cast<std::size_t>(m), i);
    std::vector<StirlingPerm> out;
    do {
        if (is_stirling(p)) out.push_back(p);
    } while (std::next_permutation(p.word.begin(), p.word.end()));
    return out;
}

long descent_count(const StirlingPerm& p, bool include_final) {
    long d = include_final ? 1 : 0;
    for (std::size_t j = 0; j + 1 < p.word.size(); ++j) {
        if (p.word[j] > p.word[j + 1]) ++d;
    }
    return d;
}

std::map<long, std::uint64_t> descent_histogram(int m, int n, bool include_final) {
    std::map<long, std::uint64_t> hist;
    for_each_stirling_perm(m, n, [&](const StirlingPerm& p) { ++hist[descent_count(p, include_final)]; });
    return hist;
}

EulerianTriangleB b_triangle(long r, std::size_t n_max) {
    if (r < 1) throw std::domain_error("b_triangle requires r >= 1");
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    for (std::size_t un = 1; un <= n_max; ++un) {
        const long n = static_cast<long>(un);
        const auto& prev = rows.back();
        std::vector<Rational> row(un + 1);
        row[0] = 1;
        for (long k = 1; k < n; ++k) {
            row[k] = (r * n - k + 1 - r) * prev[k - 1];
            if (k < n - 1) row[k] += (k + 1) * prev[k];
        }
        rows.push_back(std::move(row));
    }
    return {r, Triangle(std::move(rows))};
}

GkpSpec b_shift_spec(long r) {
    return {AffineWeight{1, 1, 0}, AffineWeight{1, -1, r}};
}

EulerianTriangleB b_triangle_via_G(long r, std::size_t n_max) {
    if (r < 1) throw std::domain_error("b_triangle_via_G requires r >= 1");
    const Triangle g = triangle_by_recurrence(b_shift_spec(r), n_max == 0 ? 0 : n_max - 1);
    std::vector<std::vector<Rational>> rows{{Rational(1)}};
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) row[k] = g.at(static_cast<long>(n - 1), static_cast<long>(k));
        rows.push_back(std::move(row));
    }
    return {r, Triangle(std::move(rows))};
}

Rational b_explicit(long r, long n, long k) {
    if (n < 1 || k < 0 || k >= n) throw std::domain_error("b_explicit requires n >= 1 and 0 <= k < n");
    Rational total = 0;
    // t_{i+1} is stored in parts[i].
    for_each_weak_composition(n - 1, k, [&](const WeakComposition& t) {
        Rational term = 1;
        long prefix = 0;
        for (long i = 1; i <= k + 1; ++i) {
            term *= pow(Rational(i), static_cast<unsigned long>(t.parts[i - 1]));
            if (i <= k) {
                prefix += t.parts[i - 1];
                term *= r * prefix + i * (r - 1) + 1;
            }
        }
        total += term;
    });
    return total;
}

Triangle marked_triangle(long r, std::size_t n_max) {
    const EulerianTriangleB b = b_triangle(r, n_max);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            row[k] = pow(Rational(r), static_cast<unsigned long>(n - k)) * b.triangle.at(n, k);
        }
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows));
}

Rational marked_residual(const Triangle& m, long r, long n, long k) {
    if (n < 1) throw std::domain_error("marked_residual requires n >= 1");
    return ((n - 1) * r - k + 1) * m.at(n - 1, k - 1) + r * (k + 1) * m.at(n - 1, k) - m.at(n, k);
}

Rational marked_explicit(long r, long n, long k) {
    if (n < 1 || k < 0 || k > n) throw std::domain_error("marked_explicit requires n >= 1 and 0 <= k <= n");
    Rational total = 0;
    for_each_weak_composition(n, k, [&](const WeakComposition& c) {
        Rational term = 1;
        long prefix = c.parts[0];
        for (long i = 1; i <= k; ++i) {
            term *= pow(Rational(1 + i), static_cast<unsigned long>(c.parts[i]));
            term *= (r - 1) * (i - 1) + r * prefix;
            prefix += c.parts[i];
        }
        total += term;
    });
    return pow(Rational(r), static_cast<unsigned long>(n - k)) * total;
}

}  // namespace gkp
