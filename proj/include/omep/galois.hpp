#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace omep {

// ---------------------------------------------------------------------------
// Prime powers
// ---------------------------------------------------------------------------

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Decomposes k = p^d with p prime; returns false if k is not a prime power.
inline bool prime_power(unsigned k, unsigned& p, unsigned& d) {
    if (k < 2) return false;
    unsigned base = k;
    for (unsigned q = 2; q * q <= k; ++q) {
        if (k % q == 0) { base = q; break; }
    }
    unsigned n = k, e = 0;
    while (n % base == 0) { n /= base; ++e; }
    if (n != 1) return false;
    p = base;
    d = e;
    return true;
}

inline bool is_prime_power(unsigned k) {
    unsigned p, d;
    return prime_power(k, p, d);
}

/// Smallest prime power strictly greater than bound/2, i.e. with 2k > bound.
inline unsigned smallest_prime_power_exceeding_half(unsigned bound) {
    for (unsigned k = 2;; ++k)
        if (2 * k > bound && is_prime_power(k)) return k;
}

// ---------------------------------------------------------------------------
// GF(p^d)
// ---------------------------------------------------------------------------

/// A finite field of order p^d, with a monic irreducible modulus of degree d
/// over GF(p). The modulus is the lexicographically least irreducible (by the
/// base-p value of its non-leading coefficients), so fields and the arrays
/// derived from them are reproducible byte for byte.
struct FieldSpec {
    unsigned p = 0;                  // characteristic
    unsigned d = 0;                  // extension degree
    std::vector<unsigned> modulus;   // d+1 coefficients, ascending, monic
    unsigned order = 0;              // p^d
};

/// Field element as a coefficient vector of length d over {0..p-1}.
struct FieldElement {
    std::vector<unsigned> coeffs;

    friend bool operator==(const FieldElement& a, const FieldElement& b) = default;
};

namespace detail {

// polynomial arithmetic over GF(p), coefficients ascending, no leading zeros
inline std::vector<unsigned> poly_trim(std::vector<unsigned> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& m,
                                      unsigned p) {
    a = poly_trim(std::move(a));
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        // m is monic, so the quotient coefficient is just the leading term
        const unsigned q = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p * p - (q * m[i]) % p) % p;
        a = poly_trim(std::move(a));
    }
    return a;
}

inline std::vector<unsigned> poly_mul(const std::vector<unsigned>& a,
                                      const std::vector<unsigned>& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

inline bool poly_divides(const std::vector<unsigned>& divisor, std::vector<unsigned> a,
                         unsigned p) {
    // divisor monic
    a = poly_trim(std::move(a));
    const std::size_t dd = divisor.size() - 1;
    while (a.size() > dd) {
        const unsigned q = a.back();
        const std::size_t shift = a.size() - 1 - dd;
        for (std::size_t i = 0; i <= dd; ++i)
            a[shift + i] = (a[shift + i] + p * p - (q * divisor[i]) % p) % p;
        a = poly_trim(std::move(a));
    }
    return a.empty();
}

inline bool is_irreducible(const std::vector<unsigned>& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // try every monic divisor of degree 1..deg/2
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        std::vector<unsigned> g(dd + 1, 0);
        g[dd] = 1;
        // iterate the non-leading coefficients as a base-p counter
        unsigned long total = 1;
        for (std::size_t i = 0; i < dd; ++i) total *= p;
        for (unsigned long v = 0; v < total; ++v) {
            unsigned long t = v;
            for (std::size_t i = 0; i < dd; ++i) { g[i] = t % p; t /= p; }
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Builds GF(k) for a prime power k; throws otherwise.
inline FieldSpec field_make(unsigned k) {
    FieldSpec s;
    if (!prime_power(k, s.p, s.d))
        throw std::invalid_argument("field_make: " + std::to_string(k) + " is not a prime power");
    s.order = k;
    if (s.d == 1) {
        s.modulus = {0, 1};  // x
        return s;
    }
    std::vector<unsigned> f(s.d + 1, 0);
    f[s.d] = 1;
    unsigned long total = 1;
    for (unsigned i = 0; i < s.d; ++i) total *= s.p;
    for (unsigned long v = 0; v < total; ++v) {
        unsigned long t = v;
        for (unsigned i = 0; i < s.d; ++i) { f[i] = t % s.p; t /= s.p; }
        if (detail::is_irreducible(f, s.p)) {
            s.modulus = f;
            return s;
        }
    }
    throw std::logic_error("field_make: no irreducible modulus found");  // unreachable
}

/// Fixed bijection between elements and 0..k-1: index = sum c_i p^i.
inline FieldElement element_from_index(const FieldSpec& s, unsigned index) {
    if (index >= s.order) throw std::out_of_range("element_from_index: index out of range");
    FieldElement e;
    e.coeffs.resize(s.d);
    for (unsigned i = 0; i < s.d; ++i) { e.coeffs[i] = index % s.p; index /= s.p; }
    return e;
}

inline unsigned element_index(const FieldSpec& s, const FieldElement& e) {
    unsigned idx = 0, mult = 1;
    for (unsigned i = 0; i < s.d; ++i) { idx += e.coeffs[i] * mult; mult *= s.p; }
    return idx;
}

inline FieldElement field_zero(const FieldSpec& s) { return element_from_index(s, 0); }
inline FieldElement field_one(const FieldSpec& s) { return element_from_index(s, 1); }

inline void check_element(const FieldSpec& s, const FieldElement& a, const char* who) {
    if (a.coeffs.size() != s.d) throw std::invalid_argument(std::string(who) + ": wrong degree");
    for (unsigned c : a.coeffs)
        if (c >= s.p) throw std::invalid_argument(std::string(who) + ": coefficient out of range");
}

inline FieldElement field_add(const FieldSpec& s, const FieldElement& a, const FieldElement& b) {
    check_element(s, a, "field_add");
    check_element(s, b, "field_add");
    FieldElement r;
    r.coeffs.resize(s.d);
    for (unsigned i = 0; i < s.d; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % s.p;
    return r;
}

inline FieldElement field_neg(const FieldSpec& s, const FieldElement& a) {
    check_element(s, a, "field_neg");
    FieldElement r;
    r.coeffs.resize(s.d);
    for (unsigned i = 0; i < s.d; ++i) r.coeffs[i] = (s.p - a.coeffs[i]) % s.p;
    return r;
}

inline FieldElement field_sub(const FieldSpec& s, const FieldElement& a, const FieldElement& b) {
    return field_add(s, a, field_neg(s, b));
}

inline FieldElement field_mul(const FieldSpec& s, const FieldElement& a, const FieldElement& b) {
    check_element(s, a, "field_mul");
    check_element(s, b, "field_mul");
    auto prod = detail::poly_mod(detail::poly_mul(a.coeffs, b.coeffs, s.p), s.modulus, s.p);
    FieldElement r;
    r.coeffs.assign(s.d, 0);
    for (std::size_t i = 0; i < prod.size(); ++i) r.coeffs[i] = prod[i];
    return r;
}

/// Multiplicative inverse by exponentiation: a^(k-2) = a^-1 in GF(k)*.
inline FieldElement field_inv(const FieldSpec& s, const FieldElement& a) {
    check_element(s, a, "field_inv");
    if (a == field_zero(s)) throw std::domain_error("field_inv: zero has no inverse");
    FieldElement result = field_one(s);
    FieldElement base = a;
    unsigned e = s.order - 2;
    while (e) {
        if (e & 1u) result = field_mul(s, result, base);
        base = field_mul(s, base, base);
        e >>= 1u;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Orthogonal arrays
// ---------------------------------------------------------------------------

/// An m-row, n-column symbol array of strength t and index lambda: every
/// t x n subarray contains each t-tuple of symbols equally often.
struct OrthogonalArray {
    std::size_t runs = 0;                     // n (columns)
    std::size_t rows = 0;                     // m
    std::vector<std::size_t> symbol_counts;   // per row
    std::size_t strength = 0;                 // t
    std::size_t index = 0;                    // lambda
    std::vector<std::vector<unsigned>> cells; // rows x runs

    friend bool operator==(const OrthogonalArray& a, const OrthogonalArray& b) = default;
};

/// Exhaustive strength-2 validation: every ordered symbol pair in every pair
/// of rows must occur exactly runs/(s_i*s_j) times; returns false otherwise.
inline bool oa_check_strength2(const OrthogonalArray& oa) {
    if (oa.rows < 2) return false;
    for (std::size_t i = 0; i < oa.rows; ++i)
        for (std::size_t j = i + 1; j < oa.rows; ++j) {
            const std::size_t si = oa.symbol_counts[i], sj = oa.symbol_counts[j];
            if (si == 0 || sj == 0 || oa.runs % (si * sj) != 0) return false;
            const std::size_t lambda = oa.runs / (si * sj);
            std::vector<std::size_t> count(si * sj, 0);
            for (std::size_t r = 0; r < oa.runs; ++r) {
                const unsigned a = oa.cells[i][r], b = oa.cells[j][r];
                if (a >= si || b >= sj) return false;
                ++count[a * sj + b];
            }
            for (std::size_t c : count)
                if (c != lambda) return false;
        }
    return true;
}

/// The classical OA(k^2, k+1, k, 2) of index 1 over GF(k): runs are the pairs
/// (x, y); one row reads x and the remaining k rows read y + c*x for each
/// c in GF(k). Rows and runs follow the fixed element order, so the output is
/// deterministic.
inline OrthogonalArray oa_from_field(unsigned k) {
    const FieldSpec f = field_make(k);  // throws if k is not a prime power
    OrthogonalArray oa;
    oa.runs = static_cast<std::size_t>(k) * k;
    oa.rows = k + 1;
    oa.symbol_counts.assign(oa.rows, k);
    oa.strength = 2;
    oa.index = 1;
    oa.cells.assign(oa.rows, std::vector<unsigned>(oa.runs, 0));

    std::vector<FieldElement> elems;
    elems.reserve(k);
    for (unsigned i = 0; i < k; ++i) elems.push_back(element_from_index(f, i));

    for (unsigned xi = 0; xi < k; ++xi)
        for (unsigned yi = 0; yi < k; ++yi) {
            const std::size_t run = static_cast<std::size_t>(xi) * k + yi;
            oa.cells[0][run] = xi;
            for (unsigned ci = 0; ci < k; ++ci) {
                const FieldElement v = field_add(f, elems[yi], field_mul(f, elems[ci], elems[xi]));
                oa.cells[1 + ci][run] = element_index(f, v);
            }
        }
    return oa;
}

}  // namespace omep
