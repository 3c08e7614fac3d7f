#pragma once

// Coefficient model and the defining two-term recurrence
//
//   T(n,k) = a(n,k) T(n-1,k) + b(n,k) T(n-1,k-1),   T(0,0) = 1,
//
// with a(n,k) = a0 + a1 k + a2 n and b(n,k) = b0 + b1 k + b2 n. Entries with
// k < 0 or k > n are zero. Everything else in the library is checked against
// the triangle built here.

#include "gkp/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gkp {

// c0 + c1*k + c2*n
struct AffineWeight {
    Rational c0;
    Rational c1;
    Rational c2;

    Rational operator()(long n, long k) const { return c0 + c1 * k + c2 * n; }

    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

inline Rational eval_weight(const AffineWeight& w, long n, long k) { return w(n, k); }

// a weights East steps, b weights North-East steps.
struct GkpSpec {
    AffineWeight a;
    AffineWeight b;

    friend bool operator==(const GkpSpec&, const GkpSpec&) = default;
};

inline const AffineWeight kUnitWeight{1, 0, 0};

// "(c0,c1,c2)"
std::string to_string(const AffineWeight& w);
// "a=(..) b=(..)"
std::string to_string(const GkpSpec& spec);

// Parses "c0,c1,c2" where each entry is in the rational wire format.
AffineWeight parse_affine(std::string_view text);

class Triangle {
public:
    // Row n must hold exactly n+1 entries and row 0 must be [1].
    explicit Triangle(std::vector<std::vector<Rational>> rows);

    std::size_t n_max() const { return rows_.size() - 1; }

    // Zero outside 0 <= k <= n; throws std::out_of_range for n > n_max.
    Rational at(long n, long k) const;

    std::span<const Rational> row(std::size_t n) const;

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

Triangle triangle_by_recurrence(const GkpSpec& spec, std::size_t n_max);

// Sum of row n; throws std::out_of_range when n > t.n_max().
Rational row_sum(const Triangle& t, std::size_t n);

}  // namespace gkp
