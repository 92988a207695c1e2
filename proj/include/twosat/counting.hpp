#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "twosat/catalog.hpp"
#include "twosat/errors.hpp"
#include "twosat/exact_coeff.hpp"
#include "twosat/parallel.hpp"
#include "twosat/rational.hpp"
#include "twosat/series.hpp"

namespace twosat {

enum class GfType { exponential, implication };
enum class TableKind { sat_by_clauses, cscc_by_excess, scc_by_arcs };

/// Cleared integer counting polynomial a_n(w) from a stored series
/// coefficient: undoes 1/n! (exponential) or (1+w)^{n(n-1)} 2^n n!
/// (implication) normalization.
inline std::vector<mpz_class> extract_cleared_poly(const TruncatedSeries<ExactRing>& series,
                                                   GfType type, long n) {
    const ExactCoeff& c = series.at(n);
    if (type == GfType::exponential) return to_integer_poly(c, mpq_class(factorial(n)));
    return to_integer_poly(shift_power_1pw(c, n * (n - 1)), mpq_class(pow2(n) * factorial(n)));
}

/// Count with m clauses/arcs: coefficient of w^m in the cleared polynomial.
inline mpz_class extract_count(const TruncatedSeries<ExactRing>& series, GfType type, long n,
                               long m) {
    const auto poly = extract_cleared_poly(series, type, n);
    return m >= 0 && m < static_cast<long>(poly.size()) ? poly[m] : mpz_class(0);
}

/// Row total a_n: the cleared polynomial evaluated at w = 1, computed by
/// evaluation rather than by summing extracted coefficients so the two paths
/// stay independent.
inline mpz_class row_total_at_one(const TruncatedSeries<ExactRing>& series, GfType type, long n) {
    const ExactCoeff& c = series.at(n);
    const mpq_class factor =
        type == GfType::exponential ? mpq_class(factorial(n)) : mpq_class(pow2(n) * factorial(n));
    const mpq_class value = type == GfType::exponential
                                ? eval_exact(c, 1) * factor
                                : eval_exact(shift_power_1pw(c, n * (n - 1)), 1) * factor;
    if (value.get_den() != 1) throw NonIntegerCount("row total is not an integer");
    return value.get_num();
}

/// Satisfiable-count polynomial via the coefficient-extraction formulation:
/// 2^n n! [z^n w^m] SetHat((1+w)^{2(n-1)} z, w) sqrt(G (.) 1/G), independent
/// of the build_sat pipeline.
inline std::vector<mpz_class> variant_sat_poly(long n) {
    const ExactRing ring;
    const auto base = build_base(ring, n);
    const auto root = series_sqrt(hadamard_exp(base.graphs, series_inv(base.graphs)));
    const auto weighted = coeffwise_weight(
        base.set_hat, [n](long k) { return WeightTerm{1, 2 * (n - 1) * k}; });
    const ExactCoeff cn = product_coefficient(weighted, root, n);
    return to_integer_poly(cn, mpq_class(pow2(n) * factorial(n)));
}

inline mpz_class variant_sat_count(long n, long m) {
    const auto poly = variant_sat_poly(n);
    return m >= 0 && m < static_cast<long>(poly.size()) ? poly[m] : mpz_class(0);
}

/// Exact count table, indexed (n, m); for cscc_by_excess the emitted second
/// index is the excess k = m - n while rows stay keyed by raw m internally.
struct CountTable {
    TableKind kind;
    std::map<std::pair<long, long>, mpz_class> rows;
    std::map<long, mpz_class> totals;

    const char* second_index_name() const {
        return kind == TableKind::cscc_by_excess ? "k" : "m";
    }
    long emitted_second_index(long n, long m) const {
        return kind == TableKind::cscc_by_excess ? m - n : m;
    }
};

/// Populates a full table from the generating-function pipeline.
/// sat_by_clauses spans m = 0..2n(n-1); cscc_by_excess keeps k = m-n >= 1;
/// scc_by_arcs spans every arc count with a nonzero entry.
inline CountTable emit_table(TableKind kind, long n_max, int jobs = 1) {
    if (n_max < 1) throw std::invalid_argument("emit_table: n_max must be >= 1");
    const ExactRing ring;
    const auto base = build_base(ring, n_max);

    GfType type = GfType::implication;
    TruncatedSeries<ExactRing> series(ring, 0);
    switch (kind) {
        case TableKind::sat_by_clauses:
            series = build_sat(base);
            break;
        case TableKind::cscc_by_excess:
            series = build_cscc(base);
            type = GfType::exponential;
            break;
        case TableKind::scc_by_arcs:
            series = build_scc(base);
            type = GfType::exponential;
            break;
    }

    CountTable table{kind, {}, {}};
    const long n_min = kind == TableKind::sat_by_clauses ? 1 : (kind == TableKind::scc_by_arcs ? 1 : 2);
    std::vector<std::vector<mpz_class>> polys(n_max + 1);
    std::vector<mpz_class> totals(n_max + 1);
    parallel_for_index(n_max + 1, jobs, [&](size_t n) {
        if (static_cast<long>(n) < n_min) return;
        polys[n] = extract_cleared_poly(series, type, n);
        totals[n] = row_total_at_one(series, type, n);
    });

    for (long n = n_min; n <= n_max; ++n) {
        const auto& poly = polys[n];
        long m_hi = static_cast<long>(poly.size()) - 1;
        if (kind == TableKind::sat_by_clauses) m_hi = 2 * n * (n - 1);
        const long m_lo = kind == TableKind::cscc_by_excess ? n + 1 : 0;
        for (long m = m_lo; m <= m_hi; ++m) {
            const mpz_class count = m < static_cast<long>(poly.size()) ? poly[m] : mpz_class(0);
            if (count < 0) throw NonIntegerCount("negative count in table");
            table.rows[{n, m}] = count;
        }
        table.totals[n] = totals[n];
    }
    return table;
}

inline void write_table_csv(const CountTable& table, std::ostream& os) {
    os << "n," << table.second_index_name() << ",count\n";
    for (const auto& [key, count] : table.rows)
        os << key.first << ',' << table.emitted_second_index(key.first, key.second) << ','
           << count.get_str() << '\n';
}

inline void write_table_json(const CountTable& table, std::ostream& os) {
    os << "[";
    bool first = true;
    for (const auto& [key, count] : table.rows) {
        os << (first ? "\n" : ",\n") << "  {\"n\": " << key.first << ", \""
           << table.second_index_name()
           << "\": " << table.emitted_second_index(key.first, key.second) << ", \"count\": \""
           << count.get_str() << "\"}";
        first = false;
    }
    os << "\n]\n";
}

}  // namespace twosat
