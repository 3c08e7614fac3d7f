#include "gkp/poly_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace gkp {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& c) { return Polynomial({c, Rational(1)}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
            c = abs(c);
        } else if (c < 0 && i > 0) {
            out += "-";
            c = abs(c);
        }
        const bool unit = c == 1 && i > 0;
        if (!unit) out += to_string(c);
        if (i > 0) {
            if (!unit) out += "*";
            out += i == 1 ? std::string("x") : "x^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial rising_basis_poly(const Rational& step, long n) {
    if (n < 0) throw std::domain_error("rising_basis_poly requires n >= 0");
    Polynomial p = Polynomial::constant(1);
    for (long i = 0; i < n; ++i) p *= Polynomial::linear(step * i);
    return p;
}

Polynomial shifted_falling_basis_poly(const Rational& shift, const Rational& step, long k) {
    if (k < 0) throw std::domain_error("shifted_falling_basis_poly requires k >= 0");
    Polynomial p = Polynomial::constant(1);
    for (long i = 0; i < k; ++i) p *= Polynomial::linear(-shift - step * i);
    return p;
}

bool TransitionReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

TransitionReport verify_transition(const AffineWeight& a, long n_max) {
    TransitionReport report{a, {}};
    if (n_max < 0) return report;
    const Triangle f = triangle_by_recurrence({a, kUnitWeight}, static_cast<std::size_t>(n_max));
    const Rational shift = a.c0 + a.c2;

    std::vector<Polynomial> falling;
    for (long k = 0; k <= n_max; ++k) falling.push_back(shifted_falling_basis_poly(shift, a.c1, k));

    for (long n = 0; n <= n_max; ++n) {
        const Polynomial lhs = rising_basis_poly(a.c2, n);
        Polynomial rhs;
        for (long k = 0; k <= n; ++k) rhs += falling[k] * f.at(n, k);

        TransitionCheck check{n, lhs == rhs, std::nullopt, 0, 0};
        if (!check.pass) {
            const auto width = static_cast<std::size_t>(std::max(lhs.degree(), rhs.degree()) + 1);
            for (std::size_t i = 0; i < width; ++i) {
                if (lhs.coeff(i) != rhs.coeff(i)) {
                    check.first_diff = i;
                    check.lhs_coeff = lhs.coeff(i);
                    check.rhs_coeff = rhs.coeff(i);
                    break;
                }
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::vector<Rational> change_basis(const std::vector<Rational>& coeffs_in_rising,
                                   const AffineWeight& a) {
    std::vector<Rational> out(coeffs_in_rising.size());
    if (coeffs_in_rising.empty()) return out;
    const Triangle f = triangle_by_recurrence({a, kUnitWeight}, coeffs_in_rising.size() - 1);
    for (std::size_t n = 0; n < coeffs_in_rising.size(); ++n) {
        if (coeffs_in_rising[n] == 0) continue;
        for (std::size_t k = 0; k <= n; ++k) out[k] += coeffs_in_rising[n] * f.at(n, k);
    }
    return out;
}

Polynomial from_falling_coords(const std::vector<Rational>& coords, const AffineWeight& a) {
    Polynomial out;
    const Rational shift = a.c0 + a.c2;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        out += shifted_falling_basis_poly(shift, a.c1, static_cast<long>(k)) * coords[k];
    }
    return out;
}

}  // namespace gkp
