#pragma once

#include <gmpxx.h>

#include "twosat/rational.hpp"
#include "twosat/rings.hpp"
#include "twosat/series.hpp"

namespace twosat {

// The base generating functions, stored as EGF coefficients a_n(w)/n!:
//   graphs            G: (1+w)^{binom(n,2)}  / n!
//   digraphs          D: (1+w)^{n(n-1)}      / n!
//   set_hat     (hat)   : (1+w)^{-binom(n,2)} / n!
//   set_ddot    (ddot)  : (1+w)^{-n(n-1)}     / (2^n n!)
//   cnf  (all 2-CNFs)   : (1+w)^{2n(n-1)}     / n!
template <CoefficientRing R>
struct GFBundle {
    TruncatedSeries<R> graphs;
    TruncatedSeries<R> digraphs;
    TruncatedSeries<R> set_hat;
    TruncatedSeries<R> set_ddot;
    TruncatedSeries<R> cnf;
};

inline long binom2(long n) { return n * (n - 1) / 2; }

template <CoefficientRing R>
TruncatedSeries<R> exp_z_series(const R& ring, long order) {
    TruncatedSeries<R> e(ring, order);
    mpq_class inv_fact = 1;
    for (long n = 0; n <= order; ++n) {
        if (n > 0) inv_fact /= n;
        e[n] = ring.mul_scalar(ring.one(), inv_fact);
    }
    return e;
}

template <CoefficientRing R>
GFBundle<R> build_base(const R& ring, long order) {
    const auto ez = exp_z_series(ring, order);
    auto weighted = [&](auto fn) { return coeffwise_weight(ez, fn); };
    return GFBundle<R>{
        weighted([](long n) { return WeightTerm{1, binom2(n)}; }),
        weighted([](long n) { return WeightTerm{1, n * (n - 1)}; }),
        weighted([](long n) { return WeightTerm{1, -binom2(n)}; }),
        weighted([](long n) { return WeightTerm{mpq_class(mpz_class(1), pow2(n)), -n * (n - 1)}; }),
        weighted([](long n) { return WeightTerm{1, 2 * n * (n - 1)}; }),
    };
}

/// Strongly connected digraphs: SCC = -log(G (.) 1/G).
template <CoefficientRing R>
TruncatedSeries<R> build_scc(const GFBundle<R>& base) {
    return -series_log(hadamard_exp(base.graphs, series_inv(base.graphs)));
}

/// Implication GF of satisfiable 2-CNFs:
///   SAT = G * ( sqrt(G (.) 1/G) (.) set_ddot(2z) ).
template <CoefficientRing R>
TruncatedSeries<R> build_sat(const GFBundle<R>& base) {
    const auto root = series_sqrt(hadamard_exp(base.graphs, series_inv(base.graphs)));
    return base.graphs * hadamard_exp(root, scale_z(base.set_ddot, 2));
}

/// EGF of contradictory strongly connected 2-CNFs:
///   CSCC = SCC(2z)/2 + log( D (.) (D / G(2z)) ).
template <CoefficientRing R>
TruncatedSeries<R> build_cscc(const GFBundle<R>& base, const TruncatedSeries<R>& scc) {
    const auto ratio = base.digraphs * series_inv(scale_z(base.graphs, 2));
    auto r = series_log(hadamard_exp(base.digraphs, ratio));
    const auto scc2_half = coeffwise_weight(
        scale_z(scc, 2), [](long) { return WeightTerm{mpq_class(1, 2), 0}; });
    return r + scc2_half;
}

template <CoefficientRing R>
TruncatedSeries<R> build_cscc(const GFBundle<R>& base) {
    return build_cscc(base, build_scc(base));
}

/// Implication GF of 2-CNFs whose ordinary/contradictory SCCs are restricted
/// to given families (EGFs with zero constant term):
///   ( e^{Cscc(z) - Scc(2z)/2} (.) set_ddot ) / ( e^{-Scc} (.) set_hat ).
template <CoefficientRing R>
TruncatedSeries<R> build_cnf_restricted(const TruncatedSeries<R>& scc,
                                        const TruncatedSeries<R>& cscc,
                                        const GFBundle<R>& base) {
    const auto half = mpq_class(1, 2);
    const auto num_arg = cscc - coeffwise_weight(scale_z(scc, 2), [&](long) {
                             return WeightTerm{half, 0};
                         });
    const auto num = hadamard_exp(series_exp(num_arg), base.set_ddot);
    const auto den = hadamard_exp(series_exp(-scc), base.set_hat);
    return num * series_inv(den);
}

/// EGF of implication digraphs with marked components, u marking non-isolated
/// source-like ordinary SCCs, v isolated ordinary pairs, s contradictory SCCs.
/// The markers enter only as scalar multipliers inside exponentials:
///   e^{(v+1-2u) SCC(2z)/2} ( D(2z) (.) [ (e^{(u-1)SCC} (.) set_hat)
///       (e^{s CSCC - SCC(2z)/2} (.) set_ddot) / (e^{-SCC} (.) set_hat) ] ).
template <CoefficientRing R>
TruncatedSeries<R> build_cnf_marked(const mpq_class& u, const mpq_class& v, const mpq_class& s,
                                    const GFBundle<R>& base, const TruncatedSeries<R>& scc,
                                    const TruncatedSeries<R>& cscc) {
    auto scaled = [&](const TruncatedSeries<R>& a, const mpq_class& factor) {
        return coeffwise_weight(a, [&](long) { return WeightTerm{factor, 0}; });
    };
    const auto scc2_half = scaled(scale_z(scc, 2), mpq_class(1, 2));

    const auto prefactor = series_exp(scaled(scc2_half, v + 1 - 2 * u));
    const auto left = hadamard_exp(series_exp(scaled(scc, u - 1)), base.set_hat);
    const auto right = hadamard_exp(series_exp(scaled(cscc, s) - scc2_half), base.set_ddot);
    const auto den = hadamard_exp(series_exp(-scc), base.set_hat);
    const auto inner = left * right * series_inv(den);
    return prefactor * hadamard_exp(scale_z(base.digraphs, 2), inner);
}

template <CoefficientRing R>
TruncatedSeries<R> build_cnf_marked(const mpq_class& u, const mpq_class& v, const mpq_class& s,
                                    const GFBundle<R>& base) {
    const auto scc = build_scc(base);
    return build_cnf_marked(u, v, s, base, scc, build_cscc(base, scc));
}

}  // namespace twosat
