#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>

#include "twosat/errors.hpp"
#include "twosat/exact_coeff.hpp"
#include "twosat/interval.hpp"
#include "twosat/rational.hpp"

namespace twosat {

// A coefficient ring is a small context object: it owns whatever evaluation
// state the arithmetic needs (nothing for the symbolic ring, the point w0 or
// its interval for the numeric ones) and exposes a uniform op set so series
// code can stay generic.
template <class R>
concept CoefficientRing = requires(const R r, const typename R::value_type v, mpq_class q, long k) {
    { r.zero() } -> std::same_as<typename R::value_type>;
    { r.one() } -> std::same_as<typename R::value_type>;
    { r.add(v, v) } -> std::same_as<typename R::value_type>;
    { r.sub(v, v) } -> std::same_as<typename R::value_type>;
    { r.neg(v) } -> std::same_as<typename R::value_type>;
    { r.mul(v, v) } -> std::same_as<typename R::value_type>;
    { r.mul_scalar(v, q) } -> std::same_as<typename R::value_type>;
    { r.div_int(v, k) } -> std::same_as<typename R::value_type>;
    { r.weight_pow_1pw(v, k) } -> std::same_as<typename R::value_type>;
    { r.compatible(r) } -> std::same_as<bool>;
    { r.name() } -> std::same_as<std::string>;
};

/// Symbolic coefficients in Q[w, (1+w)^{-1}].
struct ExactRing {
    using value_type = ExactCoeff;

    value_type zero() const { return ExactCoeff(); }
    value_type one() const { return ExactCoeff(1); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type mul_scalar(const value_type& a, const mpq_class& s) const { return a * s; }
    value_type div_int(const value_type& a, long d) const { return a * mpq_class(1, d); }
    value_type weight_pow_1pw(const value_type& a, long k) const { return shift_power_1pw(a, k); }
    bool compatible(const ExactRing&) const { return true; }
    std::string name() const { return "exact"; }
};

/// Exact rational coefficients with w specialized at a rational point w0 != -1.
/// Evaluation at w0 is a ring homomorphism from the symbolic ring, so any
/// series pipeline run here agrees exactly with the symbolic run evaluated
/// afterwards.
struct RationalPointRing {
    using value_type = mpq_class;

    explicit RationalPointRing(mpq_class w0_val) : w0(std::move(w0_val)), one_plus_w0(1 + w0) {
        if (one_plus_w0 == 0) throw PoleAtMinusOne();
    }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type mul_scalar(const value_type& a, const mpq_class& s) const { return a * s; }
    value_type div_int(const value_type& a, long d) const { return a / mpq_class(d); }
    value_type weight_pow_1pw(const value_type& a, long k) const { return a * pow_q(one_plus_w0, k); }
    bool compatible(const RationalPointRing& o) const { return w0 == o.w0; }
    std::string name() const { return "rational-point(w0=" + format_rational(w0) + ")"; }

    mpq_class w0;
    mpq_class one_plus_w0;
};

/// Certified numeric coefficients: outward-rounded intervals at a fixed
/// working precision, with w evaluated inside a (possibly exact) interval.
struct IntervalRing {
    using value_type = IntervalCoeff;

    IntervalRing(const mpq_class& w0, mpfr_prec_t prec)
        : precision_bits(prec), one_plus_w0(IntervalCoeff::from_q(1 + w0, prec)) {}
    IntervalRing(IntervalCoeff one_plus_w0_iv, mpfr_prec_t prec)
        : precision_bits(prec), one_plus_w0(std::move(one_plus_w0_iv)) {}

    value_type zero() const { return IntervalCoeff(precision_bits); }
    value_type one() const { return IntervalCoeff::point_si(1, precision_bits); }
    value_type add(const value_type& a, const value_type& b) const { return iv_add(a, b); }
    value_type sub(const value_type& a, const value_type& b) const { return iv_sub(a, b); }
    value_type neg(const value_type& a) const { return iv_neg(a); }
    value_type mul(const value_type& a, const value_type& b) const { return iv_mul(a, b); }
    value_type mul_scalar(const value_type& a, const mpq_class& s) const { return iv_mul_q(a, s); }
    value_type div_int(const value_type& a, long d) const {
        return d > 0 ? iv_div_ui(a, static_cast<unsigned long>(d))
                     : iv_neg(iv_div_ui(a, static_cast<unsigned long>(-d)));
    }
    value_type weight_pow_1pw(const value_type& a, long k) const {
        return iv_mul(a, iv_pow_si(one_plus_w0, k));
    }
    bool compatible(const IntervalRing& o) const {
        return precision_bits == o.precision_bits && one_plus_w0.lo() == o.one_plus_w0.lo() &&
               one_plus_w0.hi() == o.one_plus_w0.hi();
    }
    std::string name() const {
        return "interval(" + std::to_string(precision_bits) + " bits)";
    }

    mpfr_prec_t precision_bits;
    IntervalCoeff one_plus_w0;
};

}  // namespace twosat
