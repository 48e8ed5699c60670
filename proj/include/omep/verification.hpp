#pragma once

#include "omep/constructions.hpp"
#include "omep/plan.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace omep {

enum class Verdict { pass, fail, not_applicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

/// One verified claim about a built-in family: a stable id, a self-contained
/// statement of the identity, the expected and computed values, and the
/// verdict. Failing claims carry diagnostics in `notes`.
struct ClaimReport {
    std::string id;
    std::string statement;
    std::string expected;
    std::string computed;
    Verdict verdict = Verdict::not_applicable;
    std::string notes;
};

namespace detail {

inline ClaimReport claim_bool(std::string id, std::string statement, bool ok,
                              std::string expected = "holds", std::string notes = "") {
    ClaimReport c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.expected = std::move(expected);
    c.computed = ok ? "holds" : "does not hold";
    c.verdict = ok ? Verdict::pass : Verdict::fail;
    c.notes = std::move(notes);
    return c;
}

inline ClaimReport claim_matrix(std::string id, std::string statement, const RatMatrix& expected,
                                const RatMatrix& computed, std::string notes = "") {
    ClaimReport c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.expected = expected.str();
    c.computed = computed.str();
    c.verdict = expected == computed ? Verdict::pass : Verdict::fail;
    c.notes = std::move(notes);
    return c;
}

inline std::string spectrum_str(const std::vector<SpectrumEntry>& s) {
    std::string out;
    for (const auto& e : s) {
        if (!out.empty()) out += " ";
        out += e.value.str() + "^" + std::to_string(e.multiplicity);
    }
    return out;
}

inline ClaimReport claim_spectrum(std::string id, std::string statement, const RatMatrix& m,
                                  const std::vector<SpectrumEntry>& s) {
    ClaimReport c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.expected = spectrum_str(s);
    const bool ok = verify_spectrum(m, s);
    c.computed = ok ? c.expected : "different spectrum; characteristic polynomial differs";
    c.verdict = ok ? Verdict::pass : Verdict::fail;
    return c;
}

inline ClaimReport claim_na(std::string id, std::string statement, std::string notes) {
    ClaimReport c;
    c.id = std::move(id);
    c.statement = std::move(statement);
    c.expected = "n/a";
    c.computed = "n/a";
    c.verdict = Verdict::not_applicable;
    c.notes = std::move(notes);
    return c;
}

}  // namespace detail

inline bool all_pass(const std::vector<ClaimReport>& reports) {
    for (const auto& r : reports)
        if (r.verdict == Verdict::fail) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The 12-run plans
// ---------------------------------------------------------------------------

inline std::vector<ClaimReport> verify_a12() {
    using detail::claim_bool;
    using detail::claim_matrix;
    std::vector<ClaimReport> out;

    const RatMatrix k3_3 = Rational(3) * kn(3);

    for (int variant = 1; variant <= 3; ++variant) {
        const Plan p = build_a12(variant);
        const std::string tag = "a12." + std::to_string(variant);

        // pairwise orthogonality of the first three 3-level factors through D
        bool through_d = true;
        for (const char* a : {"A", "B", "C"})
            for (const char* b : {"A", "B", "C"})
                if (std::string(a) != b) through_d &= orthogonal_through(p, a, b, "D");
        out.push_back(claim_bool(tag + "/orthogonal-through-D",
                                 "each pair among A,B,C is mutually orthogonal through D",
                                 through_d));

        // hence eliminating D alone already yields the full C-matrix
        bool c_equals = true;
        for (const char* q : {"A", "B", "C"})
            c_equals &= full_c_matrix(p, q) == c_matrix(p, q, q, {"D"}).matrix;
        out.push_back(claim_bool(tag + "/c-equals-c-after-D",
                                 "C_P = C_{P;D} for P in {A,B,C}", c_equals));

        for (const char* q : {"A", "B", "C"})
            out.push_back(claim_matrix(tag + "/c-full/" + q,
                                       std::string("full C-matrix of ") + q + " equals 3*K_3",
                                       k3_3, full_c_matrix(p, q)));

        const auto dof = dof_summary(p);
        out.push_back(claim_bool(tag + "/saturated",
                                 "plan is saturated: model df 12 on 12 runs, residual df 0",
                                 dof == DofSummary{12, 0}));
    }

    const Plan p1 = build_a12(1);

    // documented D value; exact computation disagrees, and the claim records it
    {
        ClaimReport c = claim_matrix(
            "a12.1/c-full/D", "full C-matrix of D equals the documented (4/3)*K_3",
            Rational(4, 3) * kn(3), full_c_matrix(p1, "D"));
        if (c.verdict == Verdict::fail)
            c.notes =
                "exact computation gives 2*K_3 = [[4/3,-2/3,-2/3],...] via four independent "
                "routes (pivot-block and Moore-Penrose eliminations, two-stage Schur assembly, "
                "run-space projection); the documented value looks like a factoring slip, since "
                "the computed matrix has diagonal exactly 4/3 but is not a multiple of K_3 by "
                "that factor. Deliberately kept as a failing claim.";
        out.push_back(std::move(c));
    }

    {
        bool two_level_orth = true;
        for (const char* e : {"E", "F", "G"})
            for (const auto& f : p1.factors)
                if (f.name != e) two_level_orth &= is_proportional_frequency(p1, e, f.name);
        out.push_back(claim_bool("a12.1/two-level-orthogonal",
                                 "each 2-level factor satisfies proportional frequency with "
                                 "every other factor",
                                 two_level_orth));

        bool any_prop = false;
        for (const char* a : {"A", "B", "C", "D"})
            for (const char* b : {"A", "B", "C", "D"})
                if (std::string(a) != b) any_prop |= is_proportional_frequency(p1, a, b);
        out.push_back(claim_bool("a12.1/three-level-not-proportional",
                                 "no pair of 3-level factors satisfies proportional frequency",
                                 !any_prop));
    }

    // total information: sum of C-matrix traces of A..D exceeds 4*(14/3), the
    // documented per-factor total of the 12-run reference array
    {
        Rational total;
        for (const char* q : {"A", "B", "C", "D"}) total += full_c_matrix(p1, q).trace();
        const Rational reference(56, 3);
        ClaimReport c;
        c.id = "a12.1/total-information";
        c.statement =
            "trace of the summed C-matrices of A..D exceeds the reference array total 56/3";
        c.expected = "> 56/3";
        c.computed = total.str();
        c.verdict = total > reference ? Verdict::pass : Verdict::fail;
        out.push_back(std::move(c));
    }

    // the modified plans: C-matrices of the substituted small factors
    {
        const Plan p2 = build_a12(2);
        out.push_back(claim_matrix("a12.2/c-full/F",
                                   "full C-matrix of the added 3-level factor equals 3*K_3",
                                   k3_3, full_c_matrix(p2, "F")));
        out.push_back(claim_matrix("a12.2/c-full/E",
                                   "full C-matrix of the 2-level factor equals 3*K_2",
                                   Rational(3) * kn(2), full_c_matrix(p2, "E")));
        const Plan p3 = build_a12(3);
        out.push_back(claim_matrix("a12.3/c-full/E",
                                   "full C-matrix of the 4-level factor equals 3*K_4",
                                   Rational(3) * kn(4), full_c_matrix(p3, "E")));
        // first four factors keep their values in the modified plans
        bool same = true;
        for (const Plan* p : {&p2, &p3})
            for (const char* q : {"A", "B", "C", "D"})
                same &= full_c_matrix(*p, q) == full_c_matrix(p1, q);
        out.push_back(claim_bool("a12.23/first-four-unchanged",
                                 "C-matrices of A..D agree across all three 12-run plans", same));
    }

    return out;
}

// ---------------------------------------------------------------------------
// The 8-run plan
// ---------------------------------------------------------------------------

inline std::vector<ClaimReport> verify_a8() {
    using detail::claim_bool;
    using detail::claim_matrix;
    using detail::claim_spectrum;
    std::vector<ClaimReport> out;
    const Plan p = build_a8();

    out.push_back(claim_bool("a8/orthogonal-through-A", "B and C are orthogonal through A",
                             orthogonal_through(p, "B", "C", "A")));

    const RatMatrix c_b{{2, -1, -1}, {-1, 1, 0}, {-1, 0, 1}};
    out.push_back(claim_matrix("a8/c-after-A/B", "C_{B;A} equals the documented matrix", c_b,
                               c_matrix(p, "B", "B", {"A"}).matrix));
    out.push_back(claim_matrix("a8/c-full/B", "full C_B equals C_{B;A}", c_b,
                               full_c_matrix(p, "B")));
    out.push_back(claim_spectrum("a8/spectrum/B", "C_B has spectrum 0^1 1^1 3^1",
                                 full_c_matrix(p, "B"),
                                 {{Rational(0), 1}, {Rational(1), 1}, {Rational(3), 1}}));
    out.push_back(claim_bool("a8/c-full/C-same", "factor C has the same full C-matrix as B",
                             full_c_matrix(p, "C") == full_c_matrix(p, "B")));

    const RatMatrix c_a = Rational(1, 6) * RatMatrix{{4, -2, -2}, {-2, 7, -5}, {-2, -5, 7}};
    out.push_back(claim_matrix("a8/c-full/A", "full C_A equals the documented matrix (1/6)*[...]",
                               c_a, full_c_matrix(p, "A")));
    out.push_back(claim_spectrum("a8/spectrum/A", "C_A has spectrum 0^1 1^1 2^1",
                                 full_c_matrix(p, "A"),
                                 {{Rational(0), 1}, {Rational(1), 1}, {Rational(2), 1}}));
    return out;
}

// ---------------------------------------------------------------------------
// The blocked series
// ---------------------------------------------------------------------------

inline std::vector<ClaimReport> verify_series(std::size_t n, SeriesVariant variant) {
    using detail::claim_bool;
    using detail::claim_matrix;
    std::vector<ClaimReport> out;
    const Plan p = build_series(variant, n);
    const std::string tag = p.family;
    const long ln = static_cast<long>(n);

    std::vector<std::string> small;
    for (const auto& f : p.factors)
        if (f.name != "A" && f.name != "B" && f.name != "C" && f.name != "bl")
            small.push_back(f.name);

    // structure
    {
        bool ok = p.runs == 4 * n && p.factor("bl").levels == n;
        for (std::size_t s : replication_vector(p, "bl")) ok &= (s == 4);
        for (const char* q : {"A", "B", "C"}) ok &= p.factor(q).levels == n;
        out.push_back(claim_bool(tag + "/structure",
                                 "4n runs in n blocks of size 4; three n-level factors", ok));
    }

    // proportional frequency of the small factors with the n-level and block factors
    {
        bool ok = true;
        for (const auto& e : small) {
            for (const char* q : {"A", "B", "C"}) ok &= is_proportional_frequency(p, e, q);
            ok &= is_proportional_frequency(p, e, "bl");
        }
        out.push_back(claim_bool(tag + "/small-orthogonal",
                                 "small factors satisfy proportional frequency with every "
                                 "n-level factor and the block factor",
                                 ok));
    }
    if (variant == SeriesVariant::i) {
        bool ok = true;
        for (const auto& a : small)
            for (const auto& b : small)
                if (a != b) ok &= is_proportional_frequency(p, a, b);
        out.push_back(claim_bool(tag + "/two-level-mutually-orthogonal",
                                 "the 2-level factors are mutually orthogonal", ok));
    }
    if (variant == SeriesVariant::ii)
        out.push_back(claim_bool(tag + "/small-pair-nonorthogonal",
                                 "the 2- and 3-level factors are not mutually orthogonal",
                                 !is_proportional_frequency(p, "E", "F")));

    // incidence patterns among the n-level factors and with the block factor
    {
        std::vector<Rational> l_row(n, 0);
        l_row[0] = 2;
        l_row[1] = 1;
        l_row[n - 1] = 1;
        const RatMatrix l = circulant(l_row);
        bool ok = true;
        for (const char* a : {"A", "B", "C"})
            for (const char* b : {"A", "B", "C"})
                if (std::string(a) != b) ok &= incidence(p, a, b) == l;
        out.push_back(claim_bool(tag + "/incidence-L",
                                 "incidence between distinct n-level factors is the circulant "
                                 "(2 1 0 ... 0 1)",
                                 ok));

        std::vector<Rational> m_row(n, 0);
        m_row[0] = 1;
        m_row[1] = (n > 1) ? 1 : m_row[1];
        const RatMatrix m = Rational(2) * circulant(m_row);
        bool ok_m = true;
        for (const char* a : {"A", "B", "C"}) ok_m &= incidence(p, "bl", a) == m;
        out.push_back(claim_bool(tag + "/incidence-block-M",
                                 "block-by-factor incidence is the doubled circulant (1 1 0 ... 0)",
                                 ok_m));
    }

    // orthogonality through the block factor
    {
        bool ok = true;
        for (const char* a : {"A", "B", "C"})
            for (const char* b : {"A", "B", "C"})
                if (std::string(a) != b) {
                    ok &= orthogonal_through(p, a, b, "bl");
                    ok &= same_block_pair_counts(p, a, b) == Rational(4) * incidence(p, a, b);
                }
        out.push_back(claim_bool(tag + "/orthogonal-through-block",
                                 "every pair of n-level factors is orthogonal through the block "
                                 "factor (same-block counts equal 4x the incidence)",
                                 ok));
    }

    // small-factor C-matrices
    switch (variant) {
        case SeriesVariant::i: {
            bool ok = true;
            for (const auto& e : small) ok &= full_c_matrix(p, e) == Rational(2 * ln) * kn(2);
            out.push_back(claim_bool(tag + "/c-small",
                                     "each 2-level factor has full C-matrix (2n)*K_2", ok));
            break;
        }
        case SeriesVariant::ii:
            out.push_back(claim_matrix(tag + "/c-small/E",
                                       "the 2-level factor has full C-matrix n*K_2",
                                       Rational(ln) * kn(2), full_c_matrix(p, "E")));
            out.push_back(claim_matrix(tag + "/c-small/F",
                                       "the 3-level factor has full C-matrix n*K_3",
                                       Rational(ln) * kn(3), full_c_matrix(p, "F")));
            break;
        case SeriesVariant::iii:
            out.push_back(claim_matrix(tag + "/c-small/E",
                                       "the 4-level factor has full C-matrix n*K_4",
                                       Rational(ln) * kn(4), full_c_matrix(p, "E")));
            break;
    }

    // n-level C-matrices: circulant (2 -1 0 ... 0 -1), and equal to the
    // single-elimination C after removing the block factor alone
    {
        std::vector<Rational> c_row(n, 0);
        c_row[0] = 2;
        c_row[1] = -1;
        c_row[n - 1] = -1;
        const RatMatrix cq = circulant(c_row);
        bool ok = true, ok_bl = true;
        for (const char* q : {"A", "B", "C"}) {
            const RatMatrix c = full_c_matrix(p, q);
            ok &= c == cq;
            ok_bl &= c == c_matrix(p, q, q, {"bl"}).matrix;
        }
        out.push_back(claim_bool(tag + "/c-nlevel",
                                 "each n-level factor has full C-matrix the circulant "
                                 "(2 -1 0 ... 0 -1)",
                                 ok));
        out.push_back(claim_bool(tag + "/c-equals-c-after-block",
                                 "C_Q = C_{Q;bl} for the n-level factors", ok_bl));
    }

    // saturation
    out.push_back(claim_bool(tag + "/saturated", "residual degrees of freedom are zero",
                             dof_summary(p).residual_df == 0));

    // block factor as an extra treatment factor: assembled Schur complement
    // 4 I_n - [M M M] H^- [M M M]' with H the 3x3 block Gram of the n-level
    // factors must reproduce the engine's C-matrix of the block factor
    {
        std::vector<Rational> l_row(n, 0);
        l_row[0] = 2;
        l_row[1] = 1;
        l_row[n - 1] = (n == 3) ? l_row[n - 1] + 1 : Rational(1);
        const RatMatrix l = circulant(l_row);
        std::vector<Rational> m_row(n, 0);
        m_row[0] = 1;
        m_row[1] = 1;
        const RatMatrix m = Rational(2) * circulant(m_row);
        const RatMatrix r4 = Rational(4) * RatMatrix::identity(n);

        const RatMatrix e = hstack(hstack(m, m), m);
        RatMatrix h(3 * n, 3 * n);
        for (std::size_t bi = 0; bi < 3; ++bi)
            for (std::size_t bj = 0; bj < 3; ++bj) {
                const RatMatrix& blk = (bi == bj) ? r4 : l;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) h(bi * n + i, bj * n + j) = blk(i, j);
            }
        const RatMatrix assembled = r4 - e * g_inverse_pivot_block(h) * e.transpose();
        out.push_back(claim_matrix(tag + "/c-block-assembly",
                                   "4*I_n minus the assembled Schur term reproduces the "
                                   "C-matrix of the block factor",
                                   full_c_matrix(p, "bl"), assembled));
    }

    if (n == 6) {
        bool ok = p.runs == 24;
        for (const char* q : {"A", "B", "C", "bl"}) ok &= p.factor(q).levels == 6;
        out.push_back(claim_bool(tag + "/four-six-level",
                                 "reading the block factor as a treatment factor gives four "
                                 "6-level factors on 24 runs",
                                 ok));
        out.push_back(claim_bool(tag + "/c-block-rank",
                                 "the block-as-treatment C-matrix has rank 5",
                                 rank(full_c_matrix(p, "bl")) == 5));
    }

    // outside the asserted range, record outcomes without failing the build
    if (n < 5)
        for (auto& c : out) {
            if (c.verdict == Verdict::fail) {
                c.verdict = Verdict::not_applicable;
                c.notes += std::string(c.notes.empty() ? "" : "; ") +
                           "computed outcome recorded: identity does not hold at n=" +
                           std::to_string(n);
            }
            if (c.notes.empty()) c.notes = "evaluated outside the asserted range n >= 5";
        }

    return out;
}

// ---------------------------------------------------------------------------
// Block-design composition
// ---------------------------------------------------------------------------

inline std::vector<ClaimReport> verify_omep_bl(const BlockDesign& d, const std::string& label) {
    using detail::claim_bool;
    using detail::claim_na;
    std::vector<ClaimReport> out;
    const std::string tag = "omep-bl:" + label;

    // preconditions reported, not thrown
    try {
        validate_design(d);
    } catch (const std::exception& e) {
        out.push_back(claim_na(tag + "/preconditions", "design is valid", e.what()));
        return out;
    }
    if (!is_binary(d)) {
        out.push_back(claim_na(tag + "/preconditions", "design is binary and connected",
                               "design repeats a treatment within a block"));
        return out;
    }
    if (!is_connected(d)) {
        out.push_back(claim_na(tag + "/preconditions", "design is binary and connected",
                               "design is disconnected"));
        return out;
    }
    const auto sizes = block_sizes(d);
    const std::size_t k = sizes.front();
    for (std::size_t s : sizes)
        if (s != k) {
            out.push_back(claim_na(tag + "/preconditions", "blocks have equal size",
                                   "block sizes differ"));
            return out;
        }
    if (!is_prime_power(static_cast<unsigned>(k))) {
        out.push_back(claim_na(tag + "/preconditions",
                               "block size is a prime power (or an array is supplied)",
                               "block size " + std::to_string(k) + " is not a prime power"));
        return out;
    }

    const Plan p = build_omep_bl(d);
    const std::size_t b = d.blocks.size();
    const std::size_t v = d.treatments;
    const std::size_t m1 = p.factor_count() - 1;  // treatment factors

    std::vector<std::string> treatment;
    for (const auto& f : p.factors)
        if (f.name != "bl") treatment.push_back(f.name);

    {
        bool ok = p.runs == b * k * k && p.factor("bl").levels == b * k && m1 == k;
        for (const auto& f : treatment) ok &= p.factor(f).levels == v;
        for (std::size_t s : replication_vector(p, "bl")) ok &= (s == k);
        out.push_back(claim_bool(tag + "/structure",
                                 std::to_string(v) + "^" + std::to_string(m1) + " treatment "
                                 "structure on " + std::to_string(b * k) + " blocks of size " +
                                 std::to_string(k),
                                 ok));
    }

    {
        bool ok = true;
        const Rational rk(static_cast<long>(k));
        for (std::size_t i = 0; i < treatment.size(); ++i)
            for (std::size_t j = i + 1; j < treatment.size(); ++j)
                ok &= same_block_pair_counts(p, treatment[i], treatment[j]) ==
                      rk * incidence(p, treatment[i], treatment[j]);
        out.push_back(claim_bool(tag + "/block-orthogonality",
                                 "same-block pair counts equal k times the incidence for every "
                                 "factor pair",
                                 ok));
    }

    {
        bool ok = true;
        for (std::size_t i = 0; i < treatment.size(); ++i)
            for (std::size_t j = i + 1; j < treatment.size(); ++j)
                ok &= c_matrix(p, treatment[i], treatment[j], {"bl"}).matrix.is_zero();
        out.push_back(claim_bool(tag + "/adjusted-orthogonal",
                                 "every pairwise block-adjusted C-matrix block vanishes", ok));
    }

    {
        const RatMatrix want = Rational(static_cast<long>(k)) * block_design_c_matrix(d);
        bool ok = true;
        for (const auto& f : treatment) ok &= full_c_matrix(p, f) == want;
        out.push_back(claim_bool(tag + "/c-full",
                                 "every factor's full C-matrix equals k*C_d exactly", ok));
    }

    // all-but-two spectrum comparison against the unblocked equireplicate
    // reference value r = b k^2 / v (applies to equireplicate designs)
    {
        const auto rep = design_replication(d);
        const bool equirep =
            std::all_of(rep.begin(), rep.end(), [&](std::size_t x) { return x == rep.front(); });
        if (!equirep || (b * k * k) % v != 0) {
            out.push_back(claim_na(tag + "/all-but-two",
                                   "spectrum comparison against the equireplicate reference",
                                   "design is not equireplicate"));
        } else {
            const Rational r_ref(static_cast<long>(b * k * k / v));
            const RatMatrix c = Rational(static_cast<long>(k)) * block_design_c_matrix(d);
            auto poly = char_poly(c);
            std::size_t mult0 = 0, multr = 0;
            while (poly.size() > 1 && poly_eval(poly, Rational(0)).is_zero()) {
                poly = poly_deflate(poly, Rational(0));
                ++mult0;
            }
            while (poly.size() > 1 && poly_eval(poly, r_ref).is_zero()) {
                poly = poly_deflate(poly, r_ref);
                ++multr;
            }
            bool ok = mult0 == 1 && multr == v - 3 && poly.size() == 3;
            if (ok) {
                // remaining quadratic must have both roots strictly inside (0, r)
                const Rational& a1 = poly[1];  // monic: x^2 + a1 x + a0
                const Rational& a0 = poly[0];
                const Rational vertex = Rational(-1, 2) * a1;
                ok = a0 > Rational(0) && poly_eval(poly, r_ref) > Rational(0) &&
                     vertex > Rational(0) && vertex < r_ref;
            }
            ClaimReport c_rep = claim_bool(
                tag + "/all-but-two",
                "all main-effect contrasts except two attain the unblocked reference "
                "information r = bk^2/v; the remaining two fall strictly below r",
                ok);
            c_rep.expected = "eigenvalue " + r_ref.str() + " with multiplicity " +
                             std::to_string(v - 3) + ", two smaller nonzero eigenvalues";
            out.push_back(std::move(c_rep));
        }
    }

    if (label == "a")
        out.push_back(detail::claim_spectrum(
            tag + "/spectrum", "each factor's C-matrix has spectrum 0^1 6^2 8^3",
            full_c_matrix(p, treatment.front()),
            {{Rational(0), 1}, {Rational(6), 2}, {Rational(8), 3}}));

    return out;
}

// ---------------------------------------------------------------------------
// Conditional suite for a user-supplied 12-run reference array
// ---------------------------------------------------------------------------

/// Checks the documented properties of the published 12-run nearly-orthogonal
/// 3^4 2^3 reference array against a user-supplied plan. The array is not
/// built in; without one this suite is not applicable.
inline std::vector<ClaimReport> verify_reference_l12(const Plan& p) {
    using detail::claim_bool;
    using detail::claim_matrix;
    std::vector<ClaimReport> out;

    std::vector<std::string> three, two;
    for (const auto& f : p.factors)
        (f.levels == 3 ? three : two).push_back(f.name);
    if (p.runs != 12 || three.size() != 4 || two.size() != 3 || p.factor_count() != 7) {
        out.push_back(detail::claim_na(
            "l12-ref/shape", "supplied plan is a 12-run 3^4 2^3 array",
            "expected 12 runs with four 3-level and three 2-level factors"));
        return out;
    }

    const RatMatrix want = Rational(7, 3) * kn(3);
    for (const auto& q : three)
        out.push_back(claim_matrix("l12-ref/c-full/" + q,
                                   "full C-matrix of each 3-level factor equals (7/3)*K_3", want,
                                   full_c_matrix(p, q)));
    bool orth = true;
    for (const auto& e : two)
        for (const auto& f : p.factors)
            if (f.name != e) orth &= is_proportional_frequency(p, e, f.name);
    out.push_back(claim_bool("l12-ref/two-level-orthogonal",
                             "each 2-level factor satisfies proportional frequency with every "
                             "other factor",
                             orth));
    bool any_prop = false;
    for (const auto& a : three)
        for (const auto& b : three)
            if (a != b) any_prop |= is_proportional_frequency(p, a, b);
    out.push_back(claim_bool("l12-ref/three-level-not-proportional",
                             "no pair of 3-level factors satisfies proportional frequency",
                             !any_prop));
    return out;
}

// ---------------------------------------------------------------------------
// Aggregate
// ---------------------------------------------------------------------------

inline std::vector<ClaimReport> verify_all() {
    std::vector<ClaimReport> out;
    auto append = [&out](std::vector<ClaimReport> v) {
        for (auto& c : v) out.push_back(std::move(c));
    };
    append(verify_a12());
    append(verify_a8());
    for (std::size_t n : {5, 6, 7, 12})
        for (SeriesVariant v : {SeriesVariant::i, SeriesVariant::ii, SeriesVariant::iii})
            append(verify_series(n, v));
    for (char name : {'a', 'b', 'c', 'd'})
        append(verify_omep_bl(catalog_design(name), std::string(1, name)));
    for (std::size_t v = 4; v <= 9; ++v)
        append(verify_omep_bl(half_overlap_design(v), "half:" + std::to_string(v)));
    return out;
}

}  // namespace omep
