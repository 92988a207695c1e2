#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "twosat/errors.hpp"
#include "twosat/rational.hpp"
#include "twosat/rings.hpp"

namespace twosat {

/// Truncated power series in z over a coefficient ring. The stored coefficient
/// c_n is the full EGF coefficient a_n(w)/n! — the 1/n! is folded into the
/// ring element, so the plain Cauchy product below realizes the binomial
/// (EGF) convolution, and the Graphic/Implication variants are coefficient
/// weightings on top of it rather than distinct series types.
template <CoefficientRing R>
class TruncatedSeries {
public:
    using ring_type = R;
    using value_type = typename R::value_type;

    TruncatedSeries(R ring, long order)
        : ring_(std::move(ring)), c_(static_cast<size_t>(order) + 1, ring_.zero()) {}

    long order() const { return static_cast<long>(c_.size()) - 1; }
    const R& ring() const { return ring_; }

    const value_type& operator[](long n) const { return c_[static_cast<size_t>(n)]; }
    value_type& operator[](long n) { return c_[static_cast<size_t>(n)]; }

    const value_type& at(long n) const {
        if (n < 0 || n > order())
            throw OrderExceeded("series coefficient " + std::to_string(n) + " beyond order " +
                                std::to_string(order()));
        return c_[static_cast<size_t>(n)];
    }

private:
    R ring_;
    std::vector<value_type> c_;
};

namespace detail {

template <CoefficientRing R>
void require_same_ring(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b,
                       const char* op) {
    if (!a.ring().compatible(b.ring()))
        throw RingMismatch(std::string(op) + ": incompatible rings " + a.ring().name() + " vs " +
                           b.ring().name());
    if (a.order() != b.order())
        throw RingMismatch(std::string(op) + ": order " + std::to_string(a.order()) + " vs " +
                           std::to_string(b.order()));
}

}  // namespace detail

template <CoefficientRing R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    detail::require_same_ring(a, b, "series add");
    TruncatedSeries<R> r(a.ring(), a.order());
    for (long n = 0; n <= a.order(); ++n) r[n] = a.ring().add(a[n], b[n]);
    return r;
}

template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    detail::require_same_ring(a, b, "series sub");
    TruncatedSeries<R> r(a.ring(), a.order());
    for (long n = 0; n <= a.order(); ++n) r[n] = a.ring().sub(a[n], b[n]);
    return r;
}

template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a) {
    TruncatedSeries<R> r(a.ring(), a.order());
    for (long n = 0; n <= a.order(); ++n) r[n] = a.ring().neg(a[n]);
    return r;
}

/// Cauchy product truncated at the shared order. With 1/n! folded into the
/// stored coefficients this is the EGF product c_n = sum binom(n,k) a_k b_{n-k}.
template <CoefficientRing R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    detail::require_same_ring(a, b, "series mul");
    const R& ring = a.ring();
    TruncatedSeries<R> r(ring, a.order());
    for (long n = 0; n <= a.order(); ++n) {
        auto acc = ring.zero();
        for (long k = 0; k <= n; ++k) acc = ring.add(acc, ring.mul(a[k], b[n - k]));
        r[n] = acc;
    }
    return r;
}

/// Single coefficient of a*b without forming the whole product.
template <CoefficientRing R>
typename R::value_type product_coefficient(const TruncatedSeries<R>& a,
                                           const TruncatedSeries<R>& b, long n) {
    detail::require_same_ring(a, b, "product coefficient");
    const R& ring = a.ring();
    auto acc = ring.zero();
    for (long k = 0; k <= n; ++k) acc = ring.add(acc, ring.mul(a.at(k), b.at(n - k)));
    return acc;
}

enum class AnalyticKind { exp, log, sqrt, inv };

inline const char* analytic_kind_name(AnalyticKind k) {
    switch (k) {
        case AnalyticKind::exp: return "exp";
        case AnalyticKind::log: return "log";
        case AnalyticKind::sqrt: return "sqrt";
        case AnalyticKind::inv: return "inv";
    }
    return "?";
}

/// exp/log/sqrt/inv by the standard first-order recurrences, O(N^2) ring
/// multiplications. exp needs c_0 = 0; the others need c_0 = 1. Constant
/// terms are checked only for the exact rings, where equality is meaningful;
/// the interval ring trusts its caller (its constant terms are exact by
/// construction in every pipeline here).
template <CoefficientRing R>
TruncatedSeries<R> series_analytic(AnalyticKind kind, const TruncatedSeries<R>& a) {
    const R& ring = a.ring();
    const long N = a.order();
    TruncatedSeries<R> b(ring, N);

    if constexpr (std::is_same_v<typename R::value_type, ExactCoeff> ||
                  std::is_same_v<typename R::value_type, mpq_class>) {
        const bool want_zero = kind == AnalyticKind::exp;
        const auto& c0 = a[0];
        const bool ok = want_zero ? c0 == ring.zero() : c0 == ring.one();
        if (!ok)
            throw BadConstantTerm(std::string(analytic_kind_name(kind)) + ": constant term must be " +
                                  (want_zero ? "0" : "1"));
    }

    switch (kind) {
        case AnalyticKind::inv:
            // b_n = -sum_{k>=1} a_k b_{n-k}
            b[0] = ring.one();
            for (long n = 1; n <= N; ++n) {
                auto acc = ring.zero();
                for (long k = 1; k <= n; ++k) acc = ring.add(acc, ring.mul(a[k], b[n - k]));
                b[n] = ring.neg(acc);
            }
            break;
        case AnalyticKind::sqrt:
            // 2 b_n = a_n - sum_{0<k<n} b_k b_{n-k}
            b[0] = ring.one();
            for (long n = 1; n <= N; ++n) {
                auto acc = a[n];
                for (long k = 1; k < n; ++k) acc = ring.sub(acc, ring.mul(b[k], b[n - k]));
                b[n] = ring.div_int(acc, 2);
            }
            break;
        case AnalyticKind::exp:
            // n b_n = sum_{k>=1} k a_k b_{n-k}  (from B' = A'B)
            b[0] = ring.one();
            for (long n = 1; n <= N; ++n) {
                auto acc = ring.zero();
                for (long k = 1; k <= n; ++k)
                    acc = ring.add(acc, ring.mul_scalar(ring.mul(a[k], b[n - k]), mpq_class(k)));
                b[n] = ring.div_int(acc, n);
            }
            break;
        case AnalyticKind::log:
            // n b_n = n a_n - sum_{0<k<n} k b_k a_{n-k}  (from A B' = A')
            for (long n = 1; n <= N; ++n) {
                auto acc = ring.mul_scalar(a[n], mpq_class(n));
                for (long k = 1; k < n; ++k)
                    acc = ring.sub(acc, ring.mul_scalar(ring.mul(b[k], a[n - k]), mpq_class(k)));
                b[n] = ring.div_int(acc, n);
            }
            break;
    }
    return b;
}

template <CoefficientRing R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& a) {
    return series_analytic(AnalyticKind::exp, a);
}
template <CoefficientRing R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& a) {
    return series_analytic(AnalyticKind::log, a);
}
template <CoefficientRing R>
TruncatedSeries<R> series_sqrt(const TruncatedSeries<R>& a) {
    return series_analytic(AnalyticKind::sqrt, a);
}
template <CoefficientRing R>
TruncatedSeries<R> series_inv(const TruncatedSeries<R>& a) {
    return series_analytic(AnalyticKind::inv, a);
}

/// Exponential Hadamard product: underlying a_n(w) b_n(w)/n!, i.e. stored
/// r_n = s_n t_n n!.
template <CoefficientRing R>
TruncatedSeries<R> hadamard_exp(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    detail::require_same_ring(a, b, "hadamard");
    TruncatedSeries<R> r(a.ring(), a.order());
    for (long n = 0; n <= a.order(); ++n)
        r[n] = a.ring().mul_scalar(a.ring().mul(a[n], b[n]), mpq_class(factorial(n)));
    return r;
}

/// A(sz): c_n <- s^n c_n.
template <CoefficientRing R>
TruncatedSeries<R> scale_z(const TruncatedSeries<R>& a, const mpq_class& s) {
    TruncatedSeries<R> r(a.ring(), a.order());
    mpq_class p = 1;
    for (long n = 0; n <= a.order(); ++n) {
        r[n] = a.ring().mul_scalar(a[n], p);
        p *= s;
    }
    return r;
}

/// Per-index weight: c_n <- c_n * scalar(n) * (1+w)^{exponent(n)}. This is how
/// the hat/ddot transforms and their inverses are applied.
struct WeightTerm {
    mpq_class scalar;
    long exponent_1pw;
};

template <CoefficientRing R, class WeightFn>
TruncatedSeries<R> coeffwise_weight(const TruncatedSeries<R>& a, WeightFn&& weight) {
    TruncatedSeries<R> r(a.ring(), a.order());
    for (long n = 0; n <= a.order(); ++n) {
        const WeightTerm t = weight(n);
        r[n] = a.ring().weight_pow_1pw(a.ring().mul_scalar(a[n], t.scalar), t.exponent_1pw);
    }
    return r;
}

}  // namespace twosat
