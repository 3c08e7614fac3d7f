#pragma once

// Dense univariate polynomials over Q and the change of basis between the
// rising family (x | a2)^{(n)} = prod_{i<n} (x + i a2) and the shifted
// falling family prod_{i<k} (x - a0 - a2 - i a1), whose transition matrix is
// the b == 1 triangle F for a = (a0, a1, a2).

#include "gkp/core.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gkp {

class Polynomial {
public:
    Polynomial() = default;
    // coeffs[i] is the coefficient of x^i; trailing zeros are dropped.
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    // x + c
    static Polynomial linear(const Rational& c);

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator*(Polynomial l, const Polynomial& r) { return l *= r; }
    friend Polynomial operator*(Polynomial l, const Rational& c) { return l *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// "x^3 + 3*x^2 + 2*x"; "0" for the zero polynomial.
std::string to_string(const Polynomial& p);

// prod_{i=0..n-1} (x + i step)
Polynomial rising_basis_poly(const Rational& step, long n);

// prod_{i=0..k-1} (x - shift - i step)
Polynomial shifted_falling_basis_poly(const Rational& shift, const Rational& step, long k);

struct TransitionCheck {
    long n = 0;
    bool pass = false;
    // Set on failure: first coefficient index where the two sides differ.
    std::optional<std::size_t> first_diff;
    Rational lhs_coeff;
    Rational rhs_coeff;
};

struct TransitionReport {
    AffineWeight a;
    std::vector<TransitionCheck> checks;

    bool all_pass() const;
};

// For n = 0..n_max checks rising_basis_poly(a2, n) ==
// sum_k F(n,k) shifted_falling_basis_poly(a0 + a2, a1, k) coefficientwise.
TransitionReport verify_transition(const AffineWeight& a, long n_max);

// Maps coordinates in the rising basis to coordinates in the shifted falling
// basis: out_k = sum_n in_n F(n,k). Output length equals input length.
std::vector<Rational> change_basis(const std::vector<Rational>& coeffs_in_rising,
                                   const AffineWeight& a);

// Expands coordinates in the shifted falling basis into monomial coefficients.
Polynomial from_falling_coords(const std::vector<Rational>& coords, const AffineWeight& a);

}  // namespace gkp
