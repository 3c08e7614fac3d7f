#include "gkp/core.hpp"

#include <stdexcept>

namespace gkp {

std::string to_string(const AffineWeight& w) {
    return "(" + to_string(w.c0) + "," + to_string(w.c1) + "," + to_string(w.c2) + ")";
}

std::string to_string(const GkpSpec& spec) {
    return "a=" + to_string(spec.a) + " b=" + to_string(spec.b);
}

AffineWeight parse_affine(std::string_view text) {
    std::vector<Rational> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("expected three comma-separated rationals, got '" +
                                    std::string(text) + "'");
    }
    return {parts[0], parts[1], parts[2]};
}

Triangle::Triangle(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_[0].size() != 1 || rows_[0][0] != 1) {
        throw std::invalid_argument("triangle row 0 must be [1]");
    }
    for (std::size_t n = 0; n < rows_.size(); ++n) {
        if (rows_[n].size() != n + 1) {
            throw std::invalid_argument("triangle row " + std::to_string(n) + " must have " +
                                        std::to_string(n + 1) + " entries");
        }
    }
}

Rational Triangle::at(long n, long k) const {
    if (n < 0 || static_cast<std::size_t>(n) > n_max()) {
        throw std::out_of_range("triangle row " + std::to_string(n) + " out of range");
    }
    if (k < 0 || k > n) return 0;
    return rows_[n][k];
}

std::span<const Rational> Triangle::row(std::size_t n) const {
    if (n > n_max()) {
        throw std::out_of_range("triangle row " + std::to_string(n) + " out of range");
    }
    return rows_[n];
}

Triangle triangle_by_recurrence(const GkpSpec& spec, std::size_t n_max) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({Rational(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto& prev = rows.back();
        std::vector<Rational> row(n + 1);
        const long ln = static_cast<long>(n);
        for (long k = 0; k <= ln; ++k) {
            // The step entering (n,k) is weighted at its destination node.
            if (k < ln) row[k] += spec.a(ln, k) * prev[k];
            if (k > 0) row[k] += spec.b(ln, k) * prev[k - 1];
        }
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows));
}

Rational row_sum(const Triangle& t, std::size_t n) {
    Rational sum = 0;
    for (const auto& v : t.row(n)) sum += v;
    return sum;
}

}  // namespace gkp
