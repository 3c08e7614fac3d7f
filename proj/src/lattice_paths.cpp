#include "gkp/lattice_paths.hpp"

namespace gkp {

bool is_valid(const IncreasingSeq& s) {
    long prev = 0;
    for (long v : s.values) {
        if (v <= prev || v > s.ambient) return false;
        prev = v;
    }
    return true;
}

std::string to_string(const LatticePath& p) {
    std::string out;
    for (Step s : p.steps) {
        if (!out.empty()) out += ' ';
        out += s == Step::E ? "E" : "NE";
    }
    return out;
}

std::string to_string(const IncreasingSeq& s) {
    std::string out;
    for (long v : s.values) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

std::vector<LatticePath> enumerate_paths(long n, long k) {
    std::vector<LatticePath> out;
    for_each_path(n, k, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

Rational path_weight(const LatticePath& p, const GkpSpec& spec) {
    Rational w = 1;
    long j = 0;
    for (long i = 1; i <= p.n(); ++i) {
        if (p.steps[i - 1] == Step::NE) {
            ++j;
            w *= spec.b(i, j);
        } else {
            w *= spec.a(i, j);
        }
    }
    return w;
}

Rational total_weight_paths(long n, long k, const GkpSpec& spec) {
    Rational total = 0;
    for_each_path(n, k, [&](const LatticePath& p) { total += path_weight(p, spec); });
    return total;
}

IncreasingSeq sigma_of_path(const LatticePath& p) {
    IncreasingSeq s{{}, p.n()};
    for (long i = 0; i < p.n(); ++i) {
        if (p.steps[i] == Step::NE) s.values.push_back(i + 1);
    }
    return s;
}

LatticePath path_of_sigma(const IncreasingSeq& s) {
    if (!is_valid(s)) throw std::invalid_argument("sequence is not strictly increasing in range");
    LatticePath p;
    p.steps.assign(static_cast<std::size_t>(s.ambient), Step::E);
    for (long v : s.values) p.steps[v - 1] = Step::NE;
    return p;
}

IncreasingSeq sigma_tilde(const IncreasingSeq& s) {
    IncreasingSeq out{{}, s.ambient};
    auto it = s.values.begin();
    for (long v = 1; v <= s.ambient; ++v) {
        if (it != s.values.end() && *it == v) {
            ++it;
        } else {
            out.values.push_back(v);
        }
    }
    return out;
}

Rational explicit_sum_paths(long n, long k, const GkpSpec& spec) {
    detail::check_domain(n, k);
    Rational total = 0;
    std::vector<long> east;
    east.reserve(static_cast<std::size_t>(n - k));
    for_each_increasing(n, k, [&](std::span<const long> sigma) {
        Rational term = 1;
        for (long i = 1; i <= k; ++i) term *= spec.b(sigma[i - 1], i);

        east.clear();
        std::size_t next = 0;
        for (long v = 1; v <= n; ++v) {
            if (next < sigma.size() && sigma[next] == v) {
                ++next;
            } else {
                east.push_back(v);
            }
        }
        for (long i = 1; i <= n - k; ++i) {
            const long x = east[i - 1];
            term *= spec.a(x, x - i);
        }
        total += term;
    });
    return total;
}

Rational explicit_sum_b1(long n, long k, const AffineWeight& a) {
    detail::check_domain(n, k);
    const Rational slope = a.c2 + a.c1;
    Rational total = 0;
    for_each_increasing(n, n - k, [&](std::span<const long> p) {
        Rational term = 1;
        for (long i = 1; i <= n - k; ++i) term *= slope * p[i - 1] - a.c1 * i + a.c0;
        total += term;
    });
    return total;
}

}  // namespace gkp
