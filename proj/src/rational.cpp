#include "gkp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gkp {

std::string to_string(const Rational& value) {
    // mpq_get_str already omits "/1" for integral values.
    return value.get_str(10);
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);

    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }

    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    if (text.front() == '-') p = -p;
    Rational out(p, q);
    out.canonicalize();
    return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace gkp
