#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>

#include "twosat/big_float.hpp"

namespace twosat {

/// Closed interval [lo, hi] of arbitrary-precision floats with outward
/// (directed) rounding on every operation: whatever the exact real result of
/// an expression is, it stays inside the computed interval.
class IntervalCoeff {
public:
    explicit IntervalCoeff(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {}

    static IntervalCoeff point_si(long x, mpfr_prec_t prec) {
        IntervalCoeff r(prec);
        mpfr_set_si(r.lo_.raw(), x, MPFR_RNDD);
        mpfr_set_si(r.hi_.raw(), x, MPFR_RNDU);
        return r;
    }
    static IntervalCoeff from_q(const mpq_class& q, mpfr_prec_t prec) {
        IntervalCoeff r(prec);
        mpfr_set_q(r.lo_.raw(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.raw(), q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static IntervalCoeff from_endpoints(BigFloat lo, BigFloat hi) {
        IntervalCoeff r(std::max(lo.precision(), hi.precision()));
        r.lo_ = std::move(lo);
        r.hi_ = std::move(hi);
        if (mpfr_greater_p(r.lo_.raw(), r.hi_.raw()))
            throw std::invalid_argument("IntervalCoeff: lo > hi");
        return r;
    }

    mpfr_prec_t precision_bits() const { return lo_.precision(); }
    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }

    bool contains_q(const mpq_class& q) const { return lo_.cmp_q(q) <= 0 && hi_.cmp_q(q) >= 0; }
    bool contains(const IntervalCoeff& inner) const {
        return lo_.cmp(inner.lo_) <= 0 && hi_.cmp(inner.hi_) >= 0;
    }

    BigFloat width() const {
        BigFloat w(precision_bits());
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return w;
    }
    double width_d() const { return width().to_double(MPFR_RNDU); }

    BigFloat midpoint() const {
        BigFloat m(precision_bits());
        mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
        mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
        return m;
    }

    // One of: hi < 0, lo > 0, or straddling/zero-touching.
    enum class Sign { negative, positive, mixed };
    Sign sign_class() const {
        if (hi_.sign() < 0) return Sign::negative;
        if (lo_.sign() > 0) return Sign::positive;
        return Sign::mixed;
    }

private:
    BigFloat lo_, hi_;

    friend IntervalCoeff iv_add(const IntervalCoeff&, const IntervalCoeff&);
    friend IntervalCoeff iv_sub(const IntervalCoeff&, const IntervalCoeff&);
    friend IntervalCoeff iv_neg(const IntervalCoeff&);
    friend IntervalCoeff iv_mul(const IntervalCoeff&, const IntervalCoeff&);
    friend IntervalCoeff iv_mul_q(const IntervalCoeff&, const mpq_class&);
    friend IntervalCoeff iv_mul_z(const IntervalCoeff&, const mpz_class&);
    friend IntervalCoeff iv_div_ui(const IntervalCoeff&, unsigned long);
    friend IntervalCoeff iv_recip(const IntervalCoeff&);
    friend IntervalCoeff iv_pow_si(const IntervalCoeff&, long);
};

inline IntervalCoeff iv_add(const IntervalCoeff& a, const IntervalCoeff& b) {
    IntervalCoeff r(std::max(a.precision_bits(), b.precision_bits()));
    mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return r;
}

inline IntervalCoeff iv_sub(const IntervalCoeff& a, const IntervalCoeff& b) {
    IntervalCoeff r(std::max(a.precision_bits(), b.precision_bits()));
    mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    return r;
}

inline IntervalCoeff iv_neg(const IntervalCoeff& a) {
    IntervalCoeff r(a.precision_bits());
    mpfr_neg(r.lo_.raw(), a.hi_.raw(), MPFR_RNDD);
    mpfr_neg(r.hi_.raw(), a.lo_.raw(), MPFR_RNDU);
    return r;
}

inline IntervalCoeff iv_mul(const IntervalCoeff& a, const IntervalCoeff& b) {
    using S = IntervalCoeff::Sign;
    const mpfr_prec_t prec = std::max(a.precision_bits(), b.precision_bits());
    IntervalCoeff r(prec);
    const auto sa = a.sign_class(), sb = b.sign_class();
    auto mul = [](mpfr_ptr out, const BigFloat& x, const BigFloat& y, mpfr_rnd_t rnd) {
        mpfr_mul(out, x.raw(), y.raw(), rnd);
    };
    if (sa == S::positive && sb == S::positive) {
        mul(r.lo_.raw(), a.lo(), b.lo(), MPFR_RNDD);
        mul(r.hi_.raw(), a.hi(), b.hi(), MPFR_RNDU);
    } else if (sa == S::positive && sb == S::negative) {
        mul(r.lo_.raw(), a.hi(), b.lo(), MPFR_RNDD);
        mul(r.hi_.raw(), a.lo(), b.hi(), MPFR_RNDU);
    } else if (sa == S::positive) {
        mul(r.lo_.raw(), a.hi(), b.lo(), MPFR_RNDD);
        mul(r.hi_.raw(), a.hi(), b.hi(), MPFR_RNDU);
    } else if (sa == S::negative && sb == S::positive) {
        mul(r.lo_.raw(), a.lo(), b.hi(), MPFR_RNDD);
        mul(r.hi_.raw(), a.hi(), b.lo(), MPFR_RNDU);
    } else if (sa == S::negative && sb == S::negative) {
        mul(r.lo_.raw(), a.hi(), b.hi(), MPFR_RNDD);
        mul(r.hi_.raw(), a.lo(), b.lo(), MPFR_RNDU);
    } else if (sa == S::negative) {
        mul(r.lo_.raw(), a.lo(), b.hi(), MPFR_RNDD);
        mul(r.hi_.raw(), a.lo(), b.lo(), MPFR_RNDU);
    } else if (sb == S::positive) {
        mul(r.lo_.raw(), a.lo(), b.hi(), MPFR_RNDD);
        mul(r.hi_.raw(), a.hi(), b.hi(), MPFR_RNDU);
    } else if (sb == S::negative) {
        mul(r.lo_.raw(), a.hi(), b.lo(), MPFR_RNDD);
        mul(r.hi_.raw(), a.lo(), b.lo(), MPFR_RNDU);
    } else {
        // Both straddle zero: two candidates for each endpoint.
        BigFloat c1(prec), c2(prec);
        mul(c1.raw(), a.lo(), b.hi(), MPFR_RNDD);
        mul(c2.raw(), a.hi(), b.lo(), MPFR_RNDD);
        mpfr_min(r.lo_.raw(), c1.raw(), c2.raw(), MPFR_RNDD);
        mul(c1.raw(), a.lo(), b.lo(), MPFR_RNDU);
        mul(c2.raw(), a.hi(), b.hi(), MPFR_RNDU);
        mpfr_max(r.hi_.raw(), c1.raw(), c2.raw(), MPFR_RNDU);
    }
    return r;
}

inline IntervalCoeff iv_mul_q(const IntervalCoeff& a, const mpq_class& s) {
    IntervalCoeff r(a.precision_bits());
    if (s >= 0) {
        mpfr_mul_q(r.lo_.raw(), a.lo_.raw(), s.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_.raw(), a.hi_.raw(), s.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_.raw(), a.hi_.raw(), s.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_.raw(), a.lo_.raw(), s.get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

inline IntervalCoeff iv_mul_z(const IntervalCoeff& a, const mpz_class& s) {
    IntervalCoeff r(a.precision_bits());
    if (s >= 0) {
        mpfr_mul_z(r.lo_.raw(), a.lo_.raw(), s.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_.raw(), a.hi_.raw(), s.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_mul_z(r.lo_.raw(), a.hi_.raw(), s.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_.raw(), a.lo_.raw(), s.get_mpz_t(), MPFR_RNDU);
    }
    return r;
}

inline IntervalCoeff iv_div_ui(const IntervalCoeff& a, unsigned long d) {
    IntervalCoeff r(a.precision_bits());
    mpfr_div_ui(r.lo_.raw(), a.lo_.raw(), d, MPFR_RNDD);
    mpfr_div_ui(r.hi_.raw(), a.hi_.raw(), d, MPFR_RNDU);
    return r;
}

/// 1/a for intervals with lo > 0.
inline IntervalCoeff iv_recip(const IntervalCoeff& a) {
    if (a.sign_class() != IntervalCoeff::Sign::positive)
        throw std::domain_error("iv_recip: interval must be strictly positive");
    IntervalCoeff r(a.precision_bits());
    mpfr_ui_div(r.lo_.raw(), 1, a.hi_.raw(), MPFR_RNDD);
    mpfr_ui_div(r.hi_.raw(), 1, a.lo_.raw(), MPFR_RNDU);
    return r;
}

/// a^k for integer k. Strictly positive base uses monotone endpoint powers;
/// other bases fall back to repeated interval multiplication (k >= 0 only).
inline IntervalCoeff iv_pow_si(const IntervalCoeff& a, long k) {
    if (k == 0) return IntervalCoeff::point_si(1, a.precision_bits());
    if (a.sign_class() == IntervalCoeff::Sign::positive) {
        IntervalCoeff r(a.precision_bits());
        if (k > 0) {
            mpfr_pow_si(r.lo_.raw(), a.lo_.raw(), k, MPFR_RNDD);
            mpfr_pow_si(r.hi_.raw(), a.hi_.raw(), k, MPFR_RNDU);
        } else {
            mpfr_pow_si(r.lo_.raw(), a.hi_.raw(), k, MPFR_RNDD);
            mpfr_pow_si(r.hi_.raw(), a.lo_.raw(), k, MPFR_RNDU);
        }
        return r;
    }
    if (k < 0) throw std::domain_error("iv_pow_si: negative power of interval containing zero");
    IntervalCoeff r = IntervalCoeff::point_si(1, a.precision_bits());
    for (long i = 0; i < k; ++i) r = iv_mul(r, a);
    return r;
}

/// Horner evaluation of a rational-coefficient polynomial at an interval point.
inline IntervalCoeff iv_eval_poly(std::span<const mpq_class> coeffs, const IntervalCoeff& x) {
    IntervalCoeff r(x.precision_bits());
    for (size_t i = coeffs.size(); i-- > 0;)
        r = iv_add(iv_mul(r, x), IntervalCoeff::from_q(coeffs[i], x.precision_bits()));
    return r;
}

}  // namespace twosat
