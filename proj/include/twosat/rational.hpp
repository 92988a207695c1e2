#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "twosat/errors.hpp"

namespace twosat {

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline mpz_class pow2(unsigned long n) {
    mpz_class r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), n);
    return r;
}

/// q^k for integer k (k < 0 requires q != 0).
inline mpq_class pow_q(const mpq_class& q, long k) {
    if (k == 0) return 1;
    const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), e);
    if (k < 0) {
        if (r == 0) throw std::domain_error("pow_q: negative power of zero");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

/// Parses "NUM", "NUM/DEN" or a plain decimal like "0.25" into an exact rational.
inline mpq_class parse_rational(const std::string& text) {
    const auto dot = text.find('.');
    if (dot != std::string::npos && text.find('/') == std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const size_t frac_digits = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("parse_rational: bad decimal '" + text + "'");
        mpz_class num(digits, 10);
        mpz_class den = 1;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

/// Renders as "NUM/DEN", or "NUM" when the denominator is one.
inline std::string format_rational(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace twosat
