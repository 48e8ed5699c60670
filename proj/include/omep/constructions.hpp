#pragma once

#include "omep/galois.hpp"
#include "omep/plan.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace omep {

// ---------------------------------------------------------------------------
// Seed arrays for the 12-run plans and the blocked series
// ---------------------------------------------------------------------------

/// Selects the small-factor seed block: three 2-level rows (i), one 2-level
/// plus one 3-level row (ii), or a single 4-level row (iii).
enum class SeriesVariant { i, ii, iii };

inline const char* variant_tag(SeriesVariant v) {
    switch (v) {
        case SeriesVariant::i: return "i";
        case SeriesVariant::ii: return "ii";
        case SeriesVariant::iii: return "iii";
    }
    throw std::invalid_argument("variant_tag: bad variant");
}

inline SeriesVariant variant_from_tag(std::string_view tag) {
    if (tag == "i") return SeriesVariant::i;
    if (tag == "ii") return SeriesVariant::ii;
    if (tag == "iii") return SeriesVariant::iii;
    throw std::invalid_argument("unknown series variant '" + std::string(tag) + "'");
}

/// The 4-column seed rows for the chosen variant.
inline std::vector<std::vector<std::size_t>> build_u(SeriesVariant v) {
    switch (v) {
        case SeriesVariant::i:
            return {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}};
        case SeriesVariant::ii:
            return {{0, 0, 0, 1}, {0, 1, 2, 0}};
        case SeriesVariant::iii:
            return {{0, 1, 2, 3}};
    }
    throw std::invalid_argument("build_u: bad variant");
}

/// The 4x4 array: the three 2-level seed rows with a row of zeros appended.
inline std::vector<std::vector<std::size_t>> build_v() {
    auto v = build_u(SeriesVariant::i);
    v.push_back({0, 0, 0, 0});
    return v;
}

namespace detail {

inline std::vector<std::string> index_labels(std::size_t count) {
    std::vector<std::string> labels(count);
    for (std::size_t i = 0; i < count; ++i) labels[i] = std::to_string(i);
    return labels;
}

inline Factor make_factor(std::string name, std::size_t levels) {
    return Factor{std::move(name), levels, index_labels(levels)};
}

/// Small-factor descriptors per variant: name and level count.
inline std::vector<std::pair<std::string, std::size_t>> small_factors(SeriesVariant v) {
    switch (v) {
        case SeriesVariant::i:
            return {{"E", 2}, {"F", 2}, {"G", 2}};
        case SeriesVariant::ii:
            return {{"E", 2}, {"F", 3}};
        case SeriesVariant::iii:
            return {{"E", 4}};
    }
    throw std::invalid_argument("small_factors: bad variant");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 12-run plans and the 8-run plan
// ---------------------------------------------------------------------------

/// The 12-run plans: four 3-level factors A..D from the shifted 4x4 block
/// (three copies, shifted 0, 1, 2 mod 3) stacked over three copies of the
/// variant's seed rows. variant selects 1, 2 or 3.
inline Plan build_a12(int variant) {
    if (variant < 1 || variant > 3) throw std::invalid_argument("build_a12: variant must be 1..3");
    const SeriesVariant sv = variant == 1   ? SeriesVariant::i
                             : variant == 2 ? SeriesVariant::ii
                                            : SeriesVariant::iii;
    const auto v = build_v();
    const auto u = build_u(sv);
    const auto small = detail::small_factors(sv);

    Plan p;
    p.family = "a12:" + std::to_string(variant);
    p.runs = 12;
    for (const char* name : {"A", "B", "C", "D"}) p.factors.push_back(detail::make_factor(name, 3));
    for (const auto& [name, levels] : small) p.factors.push_back(detail::make_factor(name, levels));
    p.table.assign(p.factors.size(), std::vector<std::size_t>(12, 0));
    for (std::size_t block = 0; block < 3; ++block)
        for (std::size_t col = 0; col < 4; ++col) {
            const std::size_t run = block * 4 + col;
            for (std::size_t f = 0; f < 4; ++f) p.table[f][run] = (v[f][col] + block) % 3;
            for (std::size_t s = 0; s < u.size(); ++s) p.table[4 + s][run] = u[s][col];
        }
    validate_plan(p);
    return p;
}

/// The 8-run plan for three 3-level factors.
inline Plan build_a8() {
    Plan p;
    p.family = "a8";
    p.runs = 8;
    for (const char* name : {"A", "B", "C"}) p.factors.push_back(detail::make_factor(name, 3));
    p.table = {{0, 0, 0, 0, 1, 1, 2, 2},
               {0, 2, 0, 2, 0, 1, 0, 1},
               {2, 0, 0, 2, 1, 0, 0, 1}};
    validate_plan(p);
    return p;
}

// ---------------------------------------------------------------------------
// Blocked series on n blocks of size 4
// ---------------------------------------------------------------------------

/// The blocked series on 4n runs: the variant's small factors repeated over
/// every block, three n-level factors A,B,C built from the shifted 4x4 block,
/// and a block factor "bl" taking value j on block j (n blocks of size 4).
/// n in {3,4} is accepted with a range warning note on the plan.
inline Plan build_series(SeriesVariant variant, std::size_t n) {
    if (n < 3) throw std::invalid_argument("build_series: n must be >= 3");
    const auto v = build_v();
    const auto u = build_u(variant);
    const auto small = detail::small_factors(variant);

    Plan p;
    p.family = std::string("series:") + variant_tag(variant) + ":n=" + std::to_string(n);
    p.runs = 4 * n;
    for (const auto& [name, levels] : small) p.factors.push_back(detail::make_factor(name, levels));
    for (const char* name : {"A", "B", "C"}) p.factors.push_back(detail::make_factor(name, n));
    p.factors.push_back(detail::make_factor("bl", n));
    p.block_factor = "bl";

    const std::size_t nf = p.factors.size();
    p.table.assign(nf, std::vector<std::size_t>(p.runs, 0));
    for (std::size_t block = 0; block < n; ++block)
        for (std::size_t col = 0; col < 4; ++col) {
            const std::size_t run = block * 4 + col;
            for (std::size_t s = 0; s < u.size(); ++s) p.table[s][run] = u[s][col];
            for (std::size_t f = 0; f < 3; ++f)
                p.table[u.size() + f][run] = (v[f][col] + block) % n;
            p.table[nf - 1][run] = block;
        }
    if (n < 5)
        p.notes.push_back("n=" + std::to_string(n) +
                          " is outside the asserted range n >= 5; properties are recorded, "
                          "not asserted");
    validate_plan(p);
    return p;
}

// ---------------------------------------------------------------------------
// Block-design composition
// ---------------------------------------------------------------------------

/// Composes a connected binary equal-block-size design d (b blocks of size k,
/// v treatments) with a strength-2, index-1 OA on k symbols: per block j, one
/// copy of the OA with its first m-1 rows relabelled through the block's
/// treatment set and its last row relabelled to fresh block ids. The result
/// has m-1 treatment factors on v levels and b*k blocks of size k on b*k^2
/// runs, and is an OMEP on those blocks.
inline Plan build_omep_bl(const BlockDesign& d, const OrthogonalArray& oa) {
    validate_design(d);
    if (!is_binary(d)) throw std::invalid_argument("build_omep_bl: design is not binary");
    if (!is_connected(d)) throw std::invalid_argument("build_omep_bl: design is not connected");
    const auto sizes = block_sizes(d);
    const std::size_t k = sizes.front();
    for (std::size_t s : sizes)
        if (s != k) throw std::invalid_argument("build_omep_bl: blocks must have equal size");
    if (oa.rows < 2) throw std::invalid_argument("build_omep_bl: OA needs at least 2 rows");
    for (std::size_t s : oa.symbol_counts)
        if (s != k)
            throw std::invalid_argument("build_omep_bl: OA symbol count must equal block size");
    if (oa.runs != k * k)
        throw std::invalid_argument("build_omep_bl: OA must have k^2 runs");
    // with k^2 runs on k symbols, strength 2 forces index 1
    if (!oa_check_strength2(oa))
        throw std::invalid_argument("build_omep_bl: array is not strength 2 of index 1");

    const std::size_t b = d.blocks.size();
    const std::size_t m = oa.rows;

    Plan p;
    p.family = "omep-bl";
    p.runs = b * k * k;
    for (std::size_t f = 0; f + 1 < m; ++f) {
        const std::string name = f < 26 ? std::string(1, static_cast<char>('A' + f))
                                        : "F" + std::to_string(f + 1);
        p.factors.push_back(detail::make_factor(name, d.treatments));
    }
    p.factors.push_back(detail::make_factor("bl", b * k));
    p.block_factor = "bl";

    p.table.assign(m, std::vector<std::size_t>(p.runs, 0));
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t r = 0; r < k * k; ++r) {
            const std::size_t run = j * k * k + r;
            for (std::size_t f = 0; f + 1 < m; ++f)
                p.table[f][run] = d.blocks[j][oa.cells[f][r]];
            p.table[m - 1][run] = j * k + oa.cells[m - 1][r];
        }
    validate_plan(p);
    return p;
}

/// Two-block design covering v treatments with overlapping halves:
/// k = smallest prime power with 2k > v, blocks {0..k-1} and {v-k..v-1}.
/// The overlap makes it connected; it is binary by construction.
inline BlockDesign half_overlap_design(std::size_t v) {
    if (v < 4) throw std::invalid_argument("half_overlap_design: v must be >= 4");
    const std::size_t k = smallest_prime_power_exceeding_half(static_cast<unsigned>(v));
    if (k > v) throw std::invalid_argument("half_overlap_design: no valid block size for v");
    BlockDesign d;
    d.treatments = v;
    d.blocks.resize(2);
    for (std::size_t t = 0; t < k; ++t) d.blocks[0].push_back(t);
    for (std::size_t t = v - k; t < v; ++t) d.blocks[1].push_back(t);
    return d;
}

/// Built-in connected equireplicate designs, 0-indexed treatments.
inline BlockDesign catalog_design(char name) {
    BlockDesign d;
    switch (name) {
        case 'a':
            d.treatments = 6;
            d.blocks = {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}};
            return d;
        case 'b':
            d.treatments = 8;
            d.blocks = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}};
            return d;
        case 'c':
            d.treatments = 10;
            d.blocks = {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}, {0, 1, 2, 5, 6}, {3, 4, 7, 8, 9}};
            return d;
        case 'd':
            d.treatments = 12;
            d.blocks = {{0, 1, 2, 3, 4, 5, 6, 7},
                        {0, 1, 2, 3, 8, 9, 10, 11},
                        {4, 5, 6, 7, 8, 9, 10, 11}};
            return d;
        default:
            throw std::invalid_argument(std::string("catalog_design: unknown design '") + name +
                                        "'");
    }
}

struct CatalogEntry {
    char name;
    BlockDesign design;
    std::string description;
};

inline std::vector<CatalogEntry> design_catalog() {
    std::vector<CatalogEntry> entries;
    for (char name : {'a', 'b', 'c', 'd'}) {
        BlockDesign d = catalog_design(name);
        const std::size_t k = d.blocks.front().size();
        const std::size_t b = d.blocks.size();
        const std::size_t m1 = k;  // prime-power k gives k+1 OA rows, so k treatment factors
        CatalogEntry e{name, d,
                       std::to_string(d.treatments) + "^" + std::to_string(m1) + " on " +
                           std::to_string(b * k) + " blocks of size " + std::to_string(k)};
        entries.push_back(std::move(e));
    }
    return entries;
}

/// Convenience wrapper: compose a design with the field-generated OA on its
/// block size (which must then be a prime power).
inline Plan build_omep_bl(const BlockDesign& d) {
    validate_design(d);
    const auto sizes = block_sizes(d);
    const std::size_t k = sizes.front();
    for (std::size_t s : sizes)
        if (s != k) throw std::invalid_argument("build_omep_bl: blocks must have equal size");
    if (!is_prime_power(static_cast<unsigned>(k)))
        throw std::invalid_argument(
            "build_omep_bl: block size " + std::to_string(k) +
            " is not a prime power; supply an orthogonal array explicitly");
    return build_omep_bl(d, oa_from_field(static_cast<unsigned>(k)));
}

}  // namespace omep
