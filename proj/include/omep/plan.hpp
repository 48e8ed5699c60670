#pragma once

#include "omep/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omep {

// ---------------------------------------------------------------------------
// Data model
// ---------------------------------------------------------------------------

/// One experimental factor: a name and an ordered set of level labels.
struct Factor {
    std::string name;
    std::size_t levels = 0;
    std::vector<std::string> labels;  // size == levels

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// A mixed array: factors by row, runs by column, each cell a level index.
/// One factor may be designated as the block factor, in which case its levels
/// are block ids and its replication numbers are the block sizes.
struct Plan {
    std::vector<Factor> factors;
    std::size_t runs = 0;
    std::vector<std::vector<std::size_t>> table;  // factors x runs
    std::optional<std::string> block_factor;

    // descriptive metadata; not part of structural identity
    std::string family;
    std::vector<std::string> notes;

    std::size_t factor_count() const { return factors.size(); }

    bool has_factor(std::string_view name) const {
        return std::any_of(factors.begin(), factors.end(),
                           [&](const Factor& f) { return f.name == name; });
    }

    std::size_t index_of(std::string_view name) const {
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i].name == name) return i;
        throw std::invalid_argument("Plan: unknown factor '" + std::string(name) + "'");
    }

    const Factor& factor(std::string_view name) const { return factors[index_of(name)]; }

    std::vector<std::string> factor_names() const {
        std::vector<std::string> names;
        names.reserve(factors.size());
        for (const auto& f : factors) names.push_back(f.name);
        return names;
    }

    /// Every factor name except those listed.
    std::vector<std::string> factors_except(const std::vector<std::string>& excluded) const {
        std::vector<std::string> names;
        for (const auto& f : factors)
            if (std::find(excluded.begin(), excluded.end(), f.name) == excluded.end())
                names.push_back(f.name);
        return names;
    }

    friend bool operator==(const Plan& a, const Plan& b) {
        return a.factors == b.factors && a.runs == b.runs && a.table == b.table &&
               a.block_factor == b.block_factor;
    }
};

/// Validates the Plan invariants; throws std::invalid_argument on violation.
inline void validate_plan(const Plan& p) {
    if (p.factors.empty()) throw std::invalid_argument("Plan: no factors");
    if (p.runs == 0) throw std::invalid_argument("Plan: no runs");
    if (p.table.size() != p.factors.size())
        throw std::invalid_argument("Plan: table/factor row mismatch");
    std::set<std::string> names;
    for (const auto& f : p.factors) {
        if (f.levels < 2)
            throw std::invalid_argument("Plan: factor '" + f.name + "' needs at least 2 levels");
        if (f.labels.size() != f.levels)
            throw std::invalid_argument("Plan: factor '" + f.name + "' label count mismatch");
        if (std::set<std::string>(f.labels.begin(), f.labels.end()).size() != f.levels)
            throw std::invalid_argument("Plan: factor '" + f.name + "' has duplicate labels");
        if (!names.insert(f.name).second)
            throw std::invalid_argument("Plan: duplicate factor name '" + f.name + "'");
    }
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (p.table[i].size() != p.runs)
            throw std::invalid_argument("Plan: row length mismatch for '" + p.factors[i].name + "'");
        std::vector<bool> seen(p.factors[i].levels, false);
        for (std::size_t r = 0; r < p.runs; ++r) {
            if (p.table[i][r] >= p.factors[i].levels)
                throw std::invalid_argument("Plan: level index out of range for '" +
                                            p.factors[i].name + "'");
            seen[p.table[i][r]] = true;
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            throw std::invalid_argument("Plan: factor '" + p.factors[i].name +
                                        "' has a level with zero replication");
    }
    if (p.block_factor && !p.has_factor(*p.block_factor))
        throw std::invalid_argument("Plan: block factor '" + *p.block_factor + "' not present");
}

// ---------------------------------------------------------------------------
// Replication, incidence, design matrices
// ---------------------------------------------------------------------------

inline std::vector<std::size_t> replication_vector(const Plan& p, std::string_view factor) {
    const std::size_t fi = p.index_of(factor);
    std::vector<std::size_t> r(p.factors[fi].levels, 0);
    for (std::size_t run = 0; run < p.runs; ++run) ++r[p.table[fi][run]];
    return r;
}

inline RatMatrix replication_diag(const Plan& p, std::string_view factor) {
    const auto r = replication_vector(p, factor);
    RatMatrix m(r.size(), r.size());
    for (std::size_t i = 0; i < r.size(); ++i) m(i, i) = Rational(static_cast<long>(r[i]));
    return m;
}

/// Joint level-occurrence counts of two factors; incidence(A, A) is diag(r^A).
inline RatMatrix incidence(const Plan& p, std::string_view a, std::string_view b) {
    const std::size_t fa = p.index_of(a), fb = p.index_of(b);
    RatMatrix n(p.factors[fa].levels, p.factors[fb].levels);
    for (std::size_t run = 0; run < p.runs; ++run) {
        Rational& cell = n(p.table[fa][run], p.table[fb][run]);
        cell += 1;
    }
    return n;
}

/// Run-by-level 0/1 indicator matrix X_A (runs x s_A); each row has one 1.
inline RatMatrix design_matrix(const Plan& p, std::string_view factor) {
    const std::size_t fi = p.index_of(factor);
    RatMatrix x(p.runs, p.factors[fi].levels);
    for (std::size_t run = 0; run < p.runs; ++run) x(run, p.table[fi][run]) = 1;
    return x;
}

// ---------------------------------------------------------------------------
// Orthogonality conditions
// ---------------------------------------------------------------------------

/// Proportional frequency: n * N^{A,B} == r^A (r^B)', the classical pairwise
/// orthogonality condition.
inline bool is_proportional_frequency(const Plan& p, std::string_view a, std::string_view b) {
    const RatMatrix n_ab = incidence(p, a, b);
    const auto ra = replication_vector(p, a);
    const auto rb = replication_vector(p, b);
    const Rational n(static_cast<long>(p.runs));
    for (std::size_t i = 0; i < ra.size(); ++i)
        for (std::size_t j = 0; j < rb.size(); ++j)
            if (n * n_ab(i, j) !=
                Rational(static_cast<long>(ra[i])) * Rational(static_cast<long>(rb[j])))
                return false;
    return true;
}

/// Orthogonality of A and B through C: N^{A,B} == N^{A,C} (R^C)^-1 N^{C,B},
/// tested exactly. Requires three distinct factors.
inline bool orthogonal_through(const Plan& p, std::string_view a, std::string_view b,
                               std::string_view c) {
    if (a == b || b == c || a == c)
        throw std::invalid_argument("orthogonal_through: factors must be distinct");
    const RatMatrix n_ab = incidence(p, a, b);
    const RatMatrix n_ac = incidence(p, a, c);
    const RatMatrix n_cb = incidence(p, c, b);
    const auto rc = replication_vector(p, c);
    RatMatrix scaled = n_ac;  // N^{A,C} (R^C)^-1
    for (std::size_t j = 0; j < rc.size(); ++j) {
        const Rational inv(1, static_cast<long>(rc[j]));
        for (std::size_t i = 0; i < scaled.rows(); ++i) scaled(i, j) *= inv;
    }
    return scaled * n_cb == n_ab;
}

/// Same-block joint counts: entry (i,j) is the number of (ordered) ways level
/// i of A and level j of B occur in a common block, equal to N^{A,bl} N^{bl,B}.
inline RatMatrix same_block_pair_counts(const Plan& p, std::string_view a, std::string_view b) {
    if (!p.block_factor) throw std::invalid_argument("same_block_pair_counts: plan has no block factor");
    return incidence(p, a, *p.block_factor) * incidence(p, *p.block_factor, b);
}

// ---------------------------------------------------------------------------
// C-matrices
// ---------------------------------------------------------------------------

/// The (U,V) block of the information matrix after eliminating the general
/// mean and the factors in `eliminated`.
struct CMatrixResult {
    std::string u, v;
    std::vector<std::string> eliminated;
    RatMatrix matrix;
};

namespace detail {

/// Gram matrix of [1 | X_W1 | X_W2 | ...] assembled from run counts.
inline RatMatrix elimination_gram(const Plan& p, const std::vector<std::size_t>& elim) {
    std::size_t dim = 1;
    std::vector<std::size_t> offset(elim.size());
    for (std::size_t w = 0; w < elim.size(); ++w) {
        offset[w] = dim;
        dim += p.factors[elim[w]].levels;
    }
    RatMatrix g(dim, dim);
    g(0, 0) = Rational(static_cast<long>(p.runs));
    for (std::size_t w = 0; w < elim.size(); ++w) {
        const auto r = replication_vector(p, p.factors[elim[w]].name);
        for (std::size_t l = 0; l < r.size(); ++l) {
            g(0, offset[w] + l) = Rational(static_cast<long>(r[l]));
            g(offset[w] + l, 0) = g(0, offset[w] + l);
        }
        for (std::size_t w2 = w; w2 < elim.size(); ++w2) {
            const RatMatrix n = incidence(p, p.factors[elim[w]].name, p.factors[elim[w2]].name);
            for (std::size_t i = 0; i < n.rows(); ++i)
                for (std::size_t j = 0; j < n.cols(); ++j) {
                    g(offset[w] + i, offset[w2] + j) = n(i, j);
                    g(offset[w2] + j, offset[w] + i) = n(i, j);
                }
        }
    }
    return g;
}

/// Cross Gram Z' X for Z = [1 | X_W ...] and X the design matrix of `target`.
inline RatMatrix cross_gram(const Plan& p, const std::vector<std::size_t>& elim,
                            std::string_view target) {
    const std::size_t s = p.factor(target).levels;
    std::size_t dim = 1;
    for (std::size_t w : elim) dim += p.factors[w].levels;
    RatMatrix ztx(dim, s);
    const auto rt = replication_vector(p, target);
    for (std::size_t l = 0; l < s; ++l) ztx(0, l) = Rational(static_cast<long>(rt[l]));
    std::size_t off = 1;
    for (std::size_t w : elim) {
        const RatMatrix n = incidence(p, p.factors[w].name, target);
        for (std::size_t i = 0; i < n.rows(); ++i)
            for (std::size_t j = 0; j < n.cols(); ++j) ztx(off + i, j) = n(i, j);
        off += n.rows();
    }
    return ztx;
}

}  // namespace detail

/// C_{U,V;L}: the (U,V) block of the reduced normal equations after
/// eliminating the general mean and every factor in L. Computed as
/// X_U' (I - P_Z) X_V with Z = [1 | X_W : W in L], via the Gram identity
/// X_U' P_Z X_V = (Z'X_U)' (Z'Z)^- (Z'X_V).
inline CMatrixResult c_matrix(const Plan& p, std::string_view u, std::string_view v,
                              const std::vector<std::string>& eliminate,
                              GInverseKind kind = GInverseKind::pivot_block) {
    const std::size_t fu = p.index_of(u), fv = p.index_of(v);
    std::set<std::string> elim_set;
    for (const auto& w : eliminate) {
        p.index_of(w);  // throws on unknown name
        if (w == u || w == v)
            throw std::invalid_argument("c_matrix: eliminated set overlaps target factors");
        if (!elim_set.insert(w).second)
            throw std::invalid_argument("c_matrix: duplicate factor '" + w + "' in eliminated set");
    }
    // canonical elimination order: plan order
    std::vector<std::size_t> elim;
    for (std::size_t i = 0; i < p.factors.size(); ++i)
        if (elim_set.count(p.factors[i].name)) elim.push_back(i);

    const RatMatrix ztz = detail::elimination_gram(p, elim);
    CMatrixResult res;
    res.u = std::string(u);
    res.v = std::string(v);
    for (std::size_t i : elim) res.eliminated.push_back(p.factors[i].name);

    if (fu == fv) {
        res.matrix = project_out_gram(replication_diag(p, u), detail::cross_gram(p, elim, u),
                                      ztz, kind);
        return res;
    }
    // joint projection of [X_U | X_V]; take the off-diagonal block
    const std::size_t su = p.factors[fu].levels, sv = p.factors[fv].levels;
    const RatMatrix n_uv = incidence(p, u, v);
    RatMatrix xtx(su + sv, su + sv);
    {
        const auto ru = replication_vector(p, u);
        const auto rv = replication_vector(p, v);
        for (std::size_t i = 0; i < su; ++i) xtx(i, i) = Rational(static_cast<long>(ru[i]));
        for (std::size_t j = 0; j < sv; ++j)
            xtx(su + j, su + j) = Rational(static_cast<long>(rv[j]));
        for (std::size_t i = 0; i < su; ++i)
            for (std::size_t j = 0; j < sv; ++j) {
                xtx(i, su + j) = n_uv(i, j);
                xtx(su + j, i) = n_uv(i, j);
            }
    }
    const RatMatrix ztx = hstack(detail::cross_gram(p, elim, u), detail::cross_gram(p, elim, v));
    res.matrix = project_out_gram(xtx, ztx, ztz, kind).block(0, su, su, sv);
    return res;
}

/// C_U of the factor U: everything else (and the mean) eliminated.
inline RatMatrix full_c_matrix(const Plan& p, std::string_view u,
                               GInverseKind kind = GInverseKind::pivot_block) {
    return c_matrix(p, u, u, p.factors_except({std::string(u)}), kind).matrix;
}

/// Two-stage route to C_A: eliminate B first, then take the Schur complement
/// of the remaining factors' adjusted information matrix,
///   C_A = C_{A;B} - E (H)^- E'
/// with E the row of blocks C_{A,Q;B} and H the blocks C_{P,Q;B} over the
/// factors P,Q outside {A,B}. Must agree exactly with full_c_matrix.
inline RatMatrix c_matrix_via_schur(const Plan& p, std::string_view a, std::string_view b,
                                    GInverseKind kind = GInverseKind::pivot_block) {
    if (a == b) throw std::invalid_argument("c_matrix_via_schur: factors must be distinct");
    const std::vector<std::string> rest = p.factors_except({std::string(a), std::string(b)});
    const std::vector<std::string> elim_b{std::string(b)};
    const RatMatrix c_ab = c_matrix(p, a, a, elim_b, kind).matrix;
    if (rest.empty()) return c_ab;

    const std::size_t sa = p.factor(a).levels;
    std::size_t dim = 0;
    std::vector<std::size_t> offset;
    for (const auto& q : rest) {
        offset.push_back(dim);
        dim += p.factor(q).levels;
    }
    RatMatrix e(sa, dim), h(dim, dim);
    for (std::size_t qi = 0; qi < rest.size(); ++qi) {
        const RatMatrix block = c_matrix(p, a, rest[qi], elim_b, kind).matrix;
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j) e(i, offset[qi] + j) = block(i, j);
        for (std::size_t pi = qi; pi < rest.size(); ++pi) {
            const RatMatrix hb = c_matrix(p, rest[qi], rest[pi], elim_b, kind).matrix;
            for (std::size_t i = 0; i < hb.rows(); ++i)
                for (std::size_t j = 0; j < hb.cols(); ++j) {
                    h(offset[qi] + i, offset[pi] + j) = hb(i, j);
                    h(offset[pi] + j, offset[qi] + i) = hb(i, j);
                }
        }
    }
    return c_ab - e * g_inverse(h, kind) * e.transpose();
}

// ---------------------------------------------------------------------------
// Block designs
// ---------------------------------------------------------------------------

/// Assignment of v treatments to blocks (treatment index lists; multisets in
/// general, binary when no block repeats a treatment).
struct BlockDesign {
    std::size_t treatments = 0;
    std::vector<std::vector<std::size_t>> blocks;

    friend bool operator==(const BlockDesign&, const BlockDesign&) = default;
};

inline void validate_design(const BlockDesign& d) {
    if (d.treatments == 0 || d.blocks.empty())
        throw std::invalid_argument("BlockDesign: empty design");
    for (const auto& blk : d.blocks) {
        if (blk.empty()) throw std::invalid_argument("BlockDesign: empty block");
        for (std::size_t t : blk)
            if (t >= d.treatments)
                throw std::invalid_argument("BlockDesign: treatment index out of range");
    }
}

inline bool is_binary(const BlockDesign& d) {
    validate_design(d);
    for (const auto& blk : d.blocks) {
        std::set<std::size_t> s(blk.begin(), blk.end());
        if (s.size() != blk.size()) return false;
    }
    return true;
}

inline std::vector<std::size_t> design_replication(const BlockDesign& d) {
    std::vector<std::size_t> r(d.treatments, 0);
    for (const auto& blk : d.blocks)
        for (std::size_t t : blk) ++r[t];
    return r;
}

inline std::vector<std::size_t> block_sizes(const BlockDesign& d) {
    std::vector<std::size_t> k;
    k.reserve(d.blocks.size());
    for (const auto& blk : d.blocks) k.push_back(blk.size());
    return k;
}

/// Treatment incidence matrix N (treatments x blocks, occurrence counts).
inline RatMatrix design_incidence(const BlockDesign& d) {
    validate_design(d);
    RatMatrix n(d.treatments, d.blocks.size());
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
        for (std::size_t t : d.blocks[b]) n(t, b) += 1;
    return n;
}

/// Information matrix C_d = R - N diag(block sizes)^-1 N'.
inline RatMatrix block_design_c_matrix(const BlockDesign& d) {
    validate_design(d);
    const RatMatrix n = design_incidence(d);
    const auto r = design_replication(d);
    const auto k = block_sizes(d);
    RatMatrix scaled = n;  // N diag(1/k)
    for (std::size_t b = 0; b < k.size(); ++b) {
        const Rational inv(1, static_cast<long>(k[b]));
        for (std::size_t t = 0; t < d.treatments; ++t) scaled(t, b) *= inv;
    }
    RatMatrix c = Rational(-1) * (scaled * n.transpose());
    for (std::size_t t = 0; t < d.treatments; ++t)
        c(t, t) += Rational(static_cast<long>(r[t]));
    return c;
}

/// Connectivity of the treatment-block bipartite graph, cross-checked against
/// rank(C_d) == v-1; the two characterisations must agree.
inline bool is_connected(const BlockDesign& d) {
    validate_design(d);
    // graph traversal
    std::vector<bool> seen_t(d.treatments, false), seen_b(d.blocks.size(), false);
    std::vector<std::size_t> stack{0};  // start from treatment 0
    seen_t[0] = true;
    while (!stack.empty()) {
        const std::size_t t = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < d.blocks.size(); ++b) {
            if (seen_b[b]) continue;
            if (std::find(d.blocks[b].begin(), d.blocks[b].end(), t) == d.blocks[b].end())
                continue;
            seen_b[b] = true;
            for (std::size_t t2 : d.blocks[b])
                if (!seen_t[t2]) {
                    seen_t[t2] = true;
                    stack.push_back(t2);
                }
        }
    }
    const bool by_graph =
        std::all_of(seen_t.begin(), seen_t.end(), [](bool x) { return x; }) &&
        std::all_of(seen_b.begin(), seen_b.end(), [](bool x) { return x; });
    const bool by_rank = rank(block_design_c_matrix(d)) == d.treatments - 1;
    if (by_graph != by_rank)
        throw std::logic_error("is_connected: graph and rank characterisations disagree");
    return by_graph;
}

// ---------------------------------------------------------------------------
// Degrees of freedom
// ---------------------------------------------------------------------------

struct DofSummary {
    std::size_t model_df = 0;
    std::size_t residual_df = 0;

    friend bool operator==(const DofSummary&, const DofSummary&) = default;
};

/// Rank of the full model matrix [1 | X_A : all A] and the leftover runs.
/// A plan is saturated exactly when residual_df == 0.
inline DofSummary dof_summary(const Plan& p) {
    std::vector<std::size_t> all(p.factors.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    // rank of the model matrix equals rank of its Gram
    const std::size_t model_rank = rank(detail::elimination_gram(p, all));
    return DofSummary{model_rank, p.runs - model_rank};
}

}  // namespace omep
