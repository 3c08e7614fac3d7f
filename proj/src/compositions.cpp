#include "gkp/compositions.hpp"

#include <numeric>

namespace gkp {

bool is_valid(const WeakComposition& c) {
    if (c.k < 0 || c.k > c.n || c.parts.size() != static_cast<std::size_t>(c.k + 1)) return false;
    long sum = 0;
    for (long v : c.parts) {
        if (v < 0 || v > c.n) return false;
        sum += v;
    }
    return sum == c.n - c.k;
}

std::string to_string(const WeakComposition& c) {
    std::string out;
    for (long v : c.parts) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::vector<WeakComposition> enumerate_weak_compositions(long n, long k) {
    std::vector<WeakComposition> out;
    for_each_weak_composition(n, k, [&](const WeakComposition& c) { out.push_back(c); });
    return out;
}

IncreasingSeq comp_to_sigma(const WeakComposition& c) {
    if (!is_valid(c)) throw std::invalid_argument("invalid weak composition");
    IncreasingSeq s{{}, c.n};
    long prefix = 0;
    for (long i = 1; i <= c.k; ++i) {
        prefix += c.parts[i - 1];
        s.values.push_back(i + prefix);
    }
    return s;
}

WeakComposition sigma_tilde_to_comp(const IncreasingSeq& st) {
    if (!is_valid(st)) throw std::invalid_argument("sequence is not strictly increasing in range");
    const long n = st.ambient;
    const long k = n - static_cast<long>(st.values.size());
    WeakComposition c{std::vector<long>(static_cast<std::size_t>(k + 1), 0), n, k};
    for (std::size_t j = 0; j < st.values.size(); ++j) {
        ++c.parts[st.values[j] - static_cast<long>(j + 1)];
    }
    return c;
}

IncreasingSeq comp_to_sigma_tilde(const WeakComposition& c) {
    if (!is_valid(c)) throw std::invalid_argument("invalid weak composition");
    IncreasingSeq st{{}, c.n};
    long l = 1;
    for (long i = 0; i <= c.k; ++i) {
        for (long r = 0; r < c.parts[i]; ++r, ++l) st.values.push_back(l + i);
    }
    return st;
}

Rational weight_beta(const IncreasingSeq& st, const Rational& a0, const Rational& a1) {
    Rational w = 1;
    for (std::size_t j = 0; j < st.values.size(); ++j) {
        w *= a0 + a1 * (st.values[j] - static_cast<long>(j + 1));
    }
    return w;
}

Rational weight_delta(const WeakComposition& c, const Rational& a0, const Rational& a1) {
    Rational w = 1;
    for (long i = 0; i <= c.k; ++i) {
        w *= pow(Rational(a0 + a1 * i), static_cast<unsigned long>(c.parts[i]));
    }
    return w;
}

Rational closed_form_a2zero(long n, long k, const GkpSpec& spec) {
    if (spec.a.c2 != 0) throw std::domain_error("closed_form_a2zero requires a2 = 0");
    detail::check_domain(n, k);
    const Rational& a0 = spec.a.c0;
    const Rational& a1 = spec.a.c1;
    const Rational& b0 = spec.b.c0;
    const Rational b_slope = spec.b.c1 + spec.b.c2;
    const Rational& b2 = spec.b.c2;

    Rational total = 0;
    for_each_weak_composition(n, k, [&](const WeakComposition& c) {
        Rational term = pow(a0, static_cast<unsigned long>(c.parts[0]));
        long prefix = c.parts[0];
        for (long i = 1; i <= k; ++i) {
            term *= pow(Rational(a0 + a1 * i), static_cast<unsigned long>(c.parts[i]));
            term *= b0 + b_slope * i + b2 * prefix;
            prefix += c.parts[i];
        }
        total += term;
    });
    return total;
}

Rational closed_form_general(long n, long k, const GkpSpec& spec) {
    detail::check_domain(n, k);
    const Rational a_slope = spec.a.c2 + spec.a.c1;
    const Rational& a1 = spec.a.c1;
    const Rational& a0 = spec.a.c0;
    const Rational& b0 = spec.b.c0;
    const Rational b_slope = spec.b.c1 + spec.b.c2;
    const Rational& b2 = spec.b.c2;

    std::vector<long> counts(static_cast<std::size_t>(k + 1));
    Rational total = 0;
    for_each_increasing(n, n - k, [&](std::span<const long> p) {
        Rational term = 1;
        std::fill(counts.begin(), counts.end(), 0);
        for (long i = 1; i <= n - k; ++i) {
            term *= a_slope * p[i - 1] - a1 * i + a0;
            ++counts[p[i - 1] - i];
        }
        long lower = 0;
        for (long i = 1; i <= k; ++i) {
            lower += counts[i - 1];
            term *= b0 + b_slope * i + b2 * lower;
        }
        total += term;
    });
    return total;
}

}  // namespace gkp
