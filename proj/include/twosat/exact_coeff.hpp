#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "twosat/errors.hpp"
#include "twosat/rational.hpp"

namespace twosat {

/// Element of Q[w, (1+w)^{-1}]: a rational-coefficient polynomial in w over a
/// pure (1+w)-power denominator.
///
/// Canonical form: trailing zero coefficients trimmed; when denom_exp > 0 the
/// numerator is not divisible by (1+w) (numerator(-1) != 0). The zero element
/// is the empty numerator with denom_exp = 0.
class ExactCoeff {
public:
    ExactCoeff() = default;

    ExactCoeff(const mpq_class& constant) {  // NOLINT: implicit by design
        if (constant != 0) num_.push_back(constant);
    }
    ExactCoeff(long constant) : ExactCoeff(mpq_class(constant)) {}

    static ExactCoeff from_poly(std::vector<mpq_class> numerator, long denom_exp = 0) {
        ExactCoeff c;
        c.num_ = std::move(numerator);
        c.denom_exp_ = denom_exp;
        c.normalize();
        return c;
    }

    bool is_zero() const { return num_.empty(); }
    long degree() const { return static_cast<long>(num_.size()) - 1; }
    long denom_exp() const { return denom_exp_; }
    const std::vector<mpq_class>& numerator() const { return num_; }

    /// Numerator coefficient of w^i (zero beyond the degree).
    const mpq_class& coeff(size_t i) const {
        static const mpq_class kZero = 0;
        return i < num_.size() ? num_[i] : kZero;
    }

    friend bool operator==(const ExactCoeff& a, const ExactCoeff& b) {
        return a.denom_exp_ == b.denom_exp_ && a.num_ == b.num_;
    }

    friend ExactCoeff operator-(const ExactCoeff& a) {
        ExactCoeff r = a;
        for (auto& c : r.num_) c = -c;
        return r;
    }

    friend ExactCoeff operator+(const ExactCoeff& a, const ExactCoeff& b) {
        const long e = std::max(a.denom_exp_, b.denom_exp_);
        std::vector<mpq_class> pa =
            e == a.denom_exp_ ? a.num_ : mul_poly(a.num_, one_plus_w_pow(e - a.denom_exp_));
        std::vector<mpq_class> scaled_b;
        if (e != b.denom_exp_) scaled_b = mul_poly(b.num_, one_plus_w_pow(e - b.denom_exp_));
        const std::vector<mpq_class>& pb = e == b.denom_exp_ ? b.num_ : scaled_b;
        if (pa.size() < pb.size()) pa.resize(pb.size(), mpq_class(0));
        for (size_t i = 0; i < pb.size(); ++i) pa[i] += pb[i];
        return from_poly(std::move(pa), e);
    }

    friend ExactCoeff operator-(const ExactCoeff& a, const ExactCoeff& b) { return a + (-b); }

    friend ExactCoeff operator*(const ExactCoeff& a, const ExactCoeff& b) {
        return from_poly(mul_poly(a.num_, b.num_), a.denom_exp_ + b.denom_exp_);
    }

    friend ExactCoeff operator*(const ExactCoeff& a, const mpq_class& s) {
        if (s == 0) return ExactCoeff();
        ExactCoeff r = a;
        for (auto& c : r.num_) c *= s;
        return r;
    }
    friend ExactCoeff operator*(const mpq_class& s, const ExactCoeff& a) { return a * s; }

private:
    void normalize() {
        while (!num_.empty() && num_.back() == 0) num_.pop_back();
        if (num_.empty()) {
            denom_exp_ = 0;
            return;
        }
        // Cancel (1+w) factors against the denominator; divisibility is
        // detected by synthetic division at w = -1.
        while (denom_exp_ > 0) {
            std::vector<mpq_class> q(num_.size() - 1);
            if (num_.size() == 1) break;  // nonzero constant: not divisible
            const size_t d = num_.size() - 1;
            q[d - 1] = num_[d];
            for (size_t i = d - 1; i >= 1; --i) q[i - 1] = num_[i] - q[i];
            if (num_[0] != q[0]) break;
            num_ = std::move(q);
            --denom_exp_;
        }
    }

    static std::vector<mpq_class> mul_poly(const std::vector<mpq_class>& a,
                                           const std::vector<mpq_class>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<mpq_class> r(a.size() + b.size() - 1, mpq_class(0));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }

    static std::vector<mpq_class> one_plus_w_pow(long k) {
        std::vector<mpq_class> p(static_cast<size_t>(k) + 1);
        for (long i = 0; i <= k; ++i) p[i] = mpq_class(binomial(k, i));
        return p;
    }

    friend ExactCoeff shift_power_1pw(const ExactCoeff& a, long k);
    friend mpq_class eval_exact(const ExactCoeff& a, const mpq_class& w0);

    std::vector<mpq_class> num_;
    long denom_exp_ = 0;
};

/// a * (1+w)^k, k of either sign.
inline ExactCoeff shift_power_1pw(const ExactCoeff& a, long k) {
    if (a.is_zero()) return a;
    if (k >= 0) {
        const long cancel = std::min(a.denom_exp_, k);
        return ExactCoeff::from_poly(
            ExactCoeff::mul_poly(a.num_, ExactCoeff::one_plus_w_pow(k - cancel)),
            a.denom_exp_ - cancel);
    }
    return ExactCoeff::from_poly(a.num_, a.denom_exp_ - k);
}

/// Exact value numerator(w0)/(1+w0)^e.
inline mpq_class eval_exact(const ExactCoeff& a, const mpq_class& w0) {
    if (w0 == -1) throw PoleAtMinusOne();
    mpq_class v = 0;
    for (size_t i = a.num_.size(); i-- > 0;) v = v * w0 + a.num_[i];
    return v / pow_q(1 + w0, a.denom_exp_);
}

/// Clears a by a rational factor and returns the integer polynomial in w.
/// The input must have no (1+w) denominator left and all coefficients must
/// clear to integers; anything else signals a pipeline bug upstream.
inline std::vector<mpz_class> to_integer_poly(const ExactCoeff& a, const mpq_class& clear_factor) {
    if (a.denom_exp() != 0)
        throw NonIntegerCount("to_integer_poly: residual (1+w)^" + std::to_string(a.denom_exp()) +
                              " denominator");
    std::vector<mpz_class> out(a.numerator().size());
    for (size_t i = 0; i < out.size(); ++i) {
        const mpq_class c = a.numerator()[i] * clear_factor;
        if (c.get_den() != 1)
            throw NonIntegerCount("to_integer_poly: coefficient of w^" + std::to_string(i) +
                                  " is " + format_rational(c));
        out[i] = c.get_num();
    }
    return out;
}

}  // namespace twosat
