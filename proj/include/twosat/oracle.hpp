#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twosat/errors.hpp"
#include "twosat/parallel.hpp"

namespace twosat {

// Literal encoding: variable v in [0, n) has positive literal 2v and negated
// literal 2v+1.
using Literal = int;

inline Literal negate_lit(Literal l) { return l ^ 1; }
inline int lit_var(Literal l) { return l >> 1; }

/// Unordered pair of literals on distinct variables, stored with a < b.
struct Clause {
    Literal a;
    Literal b;
    friend bool operator==(const Clause&, const Clause&) = default;
};

inline Clause make_clause(Literal x, Literal y) {
    if (lit_var(x) == lit_var(y)) throw std::invalid_argument("clause literals share a variable");
    if (x > y) std::swap(x, y);
    return Clause{x, y};
}

/// Every possible clause on n variables in the canonical order: lexicographic
/// on (min literal, max literal). This order indexes the bitmask sweeps and
/// is part of the test fixtures.
inline std::vector<Clause> all_clauses(int n_vars) {
    std::vector<Clause> out;
    out.reserve(static_cast<size_t>(2 * n_vars * (n_vars - 1)));
    for (Literal a = 0; a < 2 * n_vars; ++a)
        for (Literal b = 2 * (lit_var(a) + 1); b < 2 * n_vars; ++b) out.push_back(Clause{a, b});
    return out;
}

/// A 2-CNF as a set of clauses; no duplicate clauses, no clause on one
/// variable.
struct ClauseFormula {
    int n_vars = 0;
    std::vector<Clause> clauses;

    static ClauseFormula from_clauses(int n_vars, std::vector<Clause> clauses) {
        ClauseFormula f{n_vars, std::move(clauses)};
        for (auto& c : f.clauses) c = make_clause(c.a, c.b);
        std::sort(f.clauses.begin(), f.clauses.end(),
                  [](const Clause& x, const Clause& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
        for (size_t i = 1; i < f.clauses.size(); ++i)
            if (f.clauses[i] == f.clauses[i - 1])
                throw std::invalid_argument("duplicate clause");
        for (const auto& c : f.clauses)
            if (lit_var(c.b) >= n_vars) throw std::invalid_argument("literal out of range");
        return f;
    }
};

/// Implication digraph on the 2n literals: clause (k or l) contributes arcs
/// not(k) -> l and not(l) -> k. Arc rows are bitmasks, so n <= 16.
class ImplicationDigraph {
public:
    explicit ImplicationDigraph(int n_vars) : n_vars_(n_vars), adj_(2 * n_vars, 0) {
        if (n_vars > 16) throw TooLarge("implication digraph limited to 16 variables");
    }

    static ImplicationDigraph from_formula(const ClauseFormula& f) {
        ImplicationDigraph d(f.n_vars);
        for (const auto& c : f.clauses) d.add_clause_arcs(c);
        return d;
    }

    void add_clause_arcs(const Clause& c) {
        add_arc(negate_lit(c.a), c.b);
        add_arc(negate_lit(c.b), c.a);
    }

    void add_arc(Literal from, Literal to) {
        if (from == to || lit_var(from) == lit_var(to))
            throw std::invalid_argument("arc within one variable");
        adj_[from] |= bit(to);
    }

    int n_vars() const { return n_vars_; }
    int n_vertices() const { return 2 * n_vars_; }
    bool has_arc(Literal from, Literal to) const { return adj_[from] & bit(to); }
    uint32_t out_mask(Literal from) const { return adj_[from]; }

    /// Symmetry (k -> l) <=> (not l -> not k), plus no loops / same-variable
    /// arcs (the constructor forbids those).
    bool symmetry_closed() const {
        for (Literal u = 0; u < n_vertices(); ++u)
            for (Literal v = 0; v < n_vertices(); ++v)
                if (has_arc(u, v) != has_arc(negate_lit(v), negate_lit(u))) return false;
        return true;
    }

    /// reach[u] = set of vertices with a (possibly empty) path from u;
    /// includes u itself.
    std::vector<uint32_t> reachability() const {
        std::vector<uint32_t> reach(adj_);
        const int m = n_vertices();
        for (Literal u = 0; u < m; ++u) reach[u] |= bit(u);
        for (Literal k = 0; k < m; ++k)
            for (Literal u = 0; u < m; ++u)
                if (reach[u] & bit(k)) reach[u] |= reach[k];
        return reach;
    }

    /// scc_of[u] = smallest vertex of u's strongly connected component.
    std::vector<int> scc_ids() const {
        const auto reach = reachability();
        const int m = n_vertices();
        std::vector<int> id(m, -1);
        for (Literal u = 0; u < m; ++u) {
            if (id[u] >= 0) continue;
            id[u] = u;
            for (Literal v = u + 1; v < m; ++v)
                if ((reach[u] & bit(v)) && (reach[v] & bit(u))) id[v] = u;
        }
        return id;
    }

private:
    static uint32_t bit(int i) { return uint32_t{1} << i; }

    int n_vars_;
    std::vector<uint32_t> adj_;
};

struct SatCheck {
    bool satisfiable = true;
    std::vector<int> contradictory_vars;
};

/// Satisfiable iff no variable has both of its literals in one SCC of the
/// implication digraph.
inline SatCheck is_satisfiable(const ClauseFormula& f) {
    const auto d = ImplicationDigraph::from_formula(f);
    const auto id = d.scc_ids();
    SatCheck r;
    for (int v = 0; v < f.n_vars; ++v)
        if (id[2 * v] == id[2 * v + 1]) r.contradictory_vars.push_back(v);
    r.satisfiable = r.contradictory_vars.empty();
    return r;
}

namespace detail {

// Per-clause arc pairs for the canonical clause list, used by the bitmask
// sweeps below.
struct ArcPair {
    Literal from1, to1, from2, to2;
};

inline std::vector<ArcPair> clause_arcs(int n_vars) {
    std::vector<ArcPair> arcs;
    for (const auto& c : all_clauses(n_vars))
        arcs.push_back({negate_lit(c.a), c.b, negate_lit(c.b), c.a});
    return arcs;
}

// Reachability closure over bitmask adjacency rows (reflexive).
inline void close_reach(uint32_t* reach, int m) {
    for (int k = 0; k < m; ++k) {
        const uint32_t row = reach[k];
        const uint32_t kb = uint32_t{1} << k;
        for (int u = 0; u < m; ++u)
            if (reach[u] & kb) reach[u] |= row;
    }
}

}  // namespace detail

/// Counts satisfiable formulae on n variables by clause count, sweeping all
/// 2^{2n(n-1)} clause subsets. Feasible to n = 4 (~16.8M subsets).
inline std::vector<uint64_t> brute_sat_counts(int n, int jobs = 1) {
    if (n > 4) throw TooLarge("brute_sat_counts: n > 4");
    const int n_clauses = 2 * n * (n - 1);
    const int m_verts = 2 * n;
    const auto arcs = detail::clause_arcs(n);
    const uint64_t total = uint64_t{1} << n_clauses;

    auto sweep = [&](uint64_t begin, uint64_t end) {
        std::vector<uint64_t> counts(n_clauses + 1, 0);
        uint32_t reach[32];
        for (uint64_t mask = begin; mask < end; ++mask) {
            for (int u = 0; u < m_verts; ++u) reach[u] = uint32_t{1} << u;
            for (uint64_t bits = mask; bits;) {
                const int c = std::countr_zero(bits);
                bits &= bits - 1;
                reach[arcs[c].from1] |= uint32_t{1} << arcs[c].to1;
                reach[arcs[c].from2] |= uint32_t{1} << arcs[c].to2;
            }
            detail::close_reach(reach, m_verts);
            bool sat = true;
            for (int v = 0; v < n && sat; ++v) {
                const bool fwd = reach[2 * v] & (uint32_t{1} << (2 * v + 1));
                const bool bwd = reach[2 * v + 1] & (uint32_t{1} << (2 * v));
                sat = !(fwd && bwd);
            }
            if (sat) ++counts[std::popcount(mask)];
        }
        return counts;
    };

    auto partials = parallel_map_ranges(total, jobs, sweep);
    std::vector<uint64_t> counts(n_clauses + 1, 0);
    for (const auto& part : partials)
        for (size_t m = 0; m < counts.size(); ++m) counts[m] += part[m];
    return counts;
}

/// Number of strongly connected labeled digraphs on k vertices (k <= 4), by
/// exhaustive enumeration of all k(k-1)-arc subsets.
inline uint64_t brute_scc_digraph_counts(int k) {
    if (k > 4) throw TooLarge("brute_scc_digraph_counts: k > 4");
    if (k == 0) return 0;
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (u != v) arcs.emplace_back(u, v);
    const uint32_t full = (uint32_t{1} << k) - 1;
    uint64_t count = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << arcs.size()); ++mask) {
        uint32_t reach[4];
        for (int u = 0; u < k; ++u) reach[u] = uint32_t{1} << u;
        for (uint64_t bits = mask; bits;) {
            const int a = std::countr_zero(bits);
            bits &= bits - 1;
            reach[arcs[a].first] |= uint32_t{1} << arcs[a].second;
        }
        detail::close_reach(reach, k);
        bool strong = true;
        for (int u = 0; u < k && strong; ++u) strong = reach[u] == full;
        if (strong) ++count;
    }
    return count;
}

/// Counts, by clause count, the 2-CNFs on n variables whose implication
/// digraph is one SCC on all 2n literals and contains a contradictory
/// variable. Feasible to n = 3.
inline std::vector<uint64_t> brute_cscc_counts(int n) {
    if (n > 3) throw TooLarge("brute_cscc_counts: n > 3");
    const int n_clauses = 2 * n * (n - 1);
    const int m_verts = 2 * n;
    const auto arcs = detail::clause_arcs(n);
    const uint32_t full = (uint32_t{1} << m_verts) - 1;
    std::vector<uint64_t> counts(n_clauses + 1, 0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n_clauses); ++mask) {
        uint32_t reach[32];
        for (int u = 0; u < m_verts; ++u) reach[u] = uint32_t{1} << u;
        for (uint64_t bits = mask; bits;) {
            const int c = std::countr_zero(bits);
            bits &= bits - 1;
            reach[arcs[c].from1] |= uint32_t{1} << arcs[c].to1;
            reach[arcs[c].from2] |= uint32_t{1} << arcs[c].to2;
        }
        detail::close_reach(reach, m_verts);
        bool strong = true;
        for (int u = 0; u < m_verts && strong; ++u) strong = reach[u] == full;
        // One SCC spanning every literal makes each variable contradictory
        // as soon as n >= 1; the check is kept explicit anyway.
        if (strong && n >= 1) {
            const bool contra = (reach[0] & 2u) && (reach[1] & 1u);
            if (contra) ++counts[std::popcount(mask)];
        }
    }
    return counts;
}

/// Structural assertions on one implication digraph; all four hold for every
/// valid digraph, so any failure flags an implementation bug.
struct StructureReport {
    bool contradictory_closed_under_negation = true;
    bool extreme_contradictory_isolated = true;
    bool no_path_between_contradictory = true;
    bool ordinary_mirror = true;

    bool all_pass() const {
        return contradictory_closed_under_negation && extreme_contradictory_isolated &&
               no_path_between_contradictory && ordinary_mirror;
    }
};

inline StructureReport check_structure(const ImplicationDigraph& d) {
    StructureReport report;
    const int m = d.n_vertices();
    const auto reach = d.reachability();
    const auto id = d.scc_ids();

    auto same_scc = [&](Literal u, Literal v) { return id[u] == id[v]; };
    std::vector<char> contradictory_scc(m, 0);
    for (int v = 0; v < d.n_vars(); ++v)
        if (same_scc(2 * v, 2 * v + 1)) contradictory_scc[id[2 * v]] = 1;

    auto source_like = [&](int comp) {
        for (Literal u = 0; u < m; ++u)
            for (Literal v = 0; v < m; ++v)
                if (d.has_arc(u, v) && id[v] == comp && id[u] != comp) return false;
        return true;
    };
    auto sink_like = [&](int comp) {
        for (Literal u = 0; u < m; ++u)
            for (Literal v = 0; v < m; ++v)
                if (d.has_arc(u, v) && id[u] == comp && id[v] != comp) return false;
        return true;
    };

    for (Literal u = 0; u < m; ++u) {
        if (id[u] != u) continue;  // one pass per component representative
        const int comp = u;
        if (contradictory_scc[comp]) {
            // (a) every literal of a contradictory SCC has its negation there
            for (Literal k = 0; k < m; ++k)
                if (id[k] == comp && !same_scc(k, negate_lit(k)))
                    report.contradictory_closed_under_negation = false;
            // (b) source-like or sink-like implies isolated
            const bool src = source_like(comp), snk = sink_like(comp);
            if ((src || snk) && !(src && snk)) report.extreme_contradictory_isolated = false;
            // (c) no oriented path to any other contradictory SCC
            for (Literal a = 0; a < m; ++a) {
                if (id[a] != comp) continue;
                for (Literal b = 0; b < m; ++b)
                    if (id[b] != comp && contradictory_scc[id[b]] && (reach[a] & (uint32_t{1} << b)))
                        report.no_path_between_contradictory = false;
            }
        } else {
            // (d) negation of an ordinary SCC is a disjoint SCC with mirrored
            // source/sink character
            const int neg_comp = id[negate_lit(comp)];
            for (Literal k = 0; k < m; ++k)
                if ((id[k] == comp) != (id[negate_lit(k)] == neg_comp)) report.ordinary_mirror = false;
            if (neg_comp == comp) report.ordinary_mirror = false;
            if (source_like(comp) != sink_like(neg_comp)) report.ordinary_mirror = false;
            if (sink_like(comp) != source_like(neg_comp)) report.ordinary_mirror = false;
        }
    }
    return report;
}

}  // namespace twosat
