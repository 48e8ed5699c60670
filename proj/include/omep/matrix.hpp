#pragma once

#include "omep/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace omep {

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("RatMatrix: ragged initializer");
            for (const auto& v : row) a_.push_back(v);
        }
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static RatMatrix zeros(std::size_t r, std::size_t c) { return RatMatrix(r, c); }
    static RatMatrix ones(std::size_t r, std::size_t c) {
        RatMatrix m(r, c);
        for (auto& v : m.a_) v = 1;
        return m;
    }
    static RatMatrix diagonal(const std::vector<Rational>& d) {
        RatMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("RatMatrix::block");
        RatMatrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    /// Submatrix on the given row and column index sets.
    RatMatrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        RatMatrix b(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (rs[i] >= rows_ || cs[j] >= cols_) throw std::out_of_range("RatMatrix::select");
                b(i, j) = (*this)(rs[i], cs[j]);
            }
        return b;
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        a.check_same_shape(b, "+");
        RatMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        a.check_same_shape(b, "-");
        RatMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in *");
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend RatMatrix operator*(const Rational& s, const RatMatrix& m) {
        RatMatrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.a_.size(); ++i) r.a_[i] = s * m.a_[i];
        return r;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    Rational trace() const {
        Rational t;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Rational& v) { return v.is_zero(); });
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    std::vector<Rational> row_sums() const {
        std::vector<Rational> s(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
        return s;
    }

    /// Compact single-line rendering, e.g. "[[2, -1], [-1, 2]]".
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += (*this)(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

    /// Multi-line rendering with aligned columns for terminal output.
    std::string pretty(const std::string& indent = "  ") const {
        std::vector<std::string> cells(a_.size());
        std::vector<std::size_t> width(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                cells[i * cols_ + j] = (*this)(i, j).str();
                width[j] = std::max(width[j], cells[i * cols_ + j].size());
            }
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += indent + "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                const std::string& c = cells[i * cols_ + j];
                out += std::string(width[j] - c.size() + (j ? 1 : 0), ' ') + c;
            }
            out += " ]\n";
        }
        return out;
    }

private:
    void check_same_shape(const RatMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("RatMatrix: shape mismatch in ") + op);
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    RatMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

inline RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    RatMatrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// Reduction and inverses
// ---------------------------------------------------------------------------

struct RrefResult {
    RatMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

/// Row-reduced echelon form by Gauss-Jordan elimination. Pivot rows are chosen
/// by smallest printed size to limit intermediate growth; the RREF itself is
/// canonical, so the result does not depend on that choice.
inline RrefResult rref(const RatMatrix& m) {
    RrefResult res;
    res.reduced = m;
    RatMatrix& a = res.reduced;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t best = nr;
        std::size_t best_size = 0;
        for (std::size_t i = row; i < nr; ++i) {
            if (a(i, col).is_zero()) continue;
            const std::size_t sz = a(i, col).digit_size();
            if (best == nr || sz < best_size) {
                best = i;
                best_size = sz;
            }
        }
        if (best == nr) continue;
        if (best != row)
            for (std::size_t j = 0; j < nc; ++j) std::swap(a(row, j), a(best, j));
        const Rational inv = a(row, col).reciprocal();
        for (std::size_t j = col; j < nc; ++j)
            if (!a(row, j).is_zero()) a(row, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < nc; ++j)
                if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
        }
        res.pivot_columns.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// Inverse of a nonsingular square matrix; throws on singular input.
inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    auto r = rref(hstack(m, RatMatrix::identity(n)));
    // invertible iff the pivots of the augmented system land in the left block
    if (r.rank < n || r.pivot_columns[n - 1] != n - 1)
        throw std::domain_error("inverse: singular matrix");
    return r.reduced.block(0, n, n, n);
}

inline Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!a(i, col).is_zero()) { piv = i; break; }
        if (piv == n) return Rational(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            det = -det;
        }
        det *= a(col, col);
        const Rational inv = a(col, col).reciprocal();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const Rational f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

/// Moore-Penrose inverse in exact rationals via rank factorization:
/// m = F G with F the pivot columns of m and G the nonzero rows of rref(m),
/// then g = Gt (G Gt)^-1 (Ft F)^-1 Ft. Satisfies all four Penrose identities.
inline RatMatrix g_inverse(const RatMatrix& m) {
    if (m.empty()) throw std::invalid_argument("g_inverse: empty matrix");
    const auto r = rref(m);
    if (r.rank == 0) return RatMatrix::zeros(m.cols(), m.rows());
    std::vector<std::size_t> all_rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
    const RatMatrix f = m.select(all_rows, r.pivot_columns);
    const RatMatrix g = r.reduced.block(0, 0, r.rank, m.cols());
    const RatMatrix gt = g.transpose();
    const RatMatrix ft = f.transpose();
    return gt * inverse(g * gt) * inverse(ft * f) * ft;
}

/// {1}-generalized inverse of a symmetric positive-semidefinite matrix:
/// with S a maximal independent column set (from rref), m[S,S] is invertible
/// and embedding its inverse at S x S gives m g m = m.
inline RatMatrix g_inverse_pivot_block(const RatMatrix& m) {
    if (m.empty()) throw std::invalid_argument("g_inverse_pivot_block: empty matrix");
    if (!m.is_symmetric())
        throw std::invalid_argument("g_inverse_pivot_block: requires a symmetric matrix");
    const auto r = rref(m);
    RatMatrix g(m.rows(), m.rows());
    if (r.rank == 0) return g;
    const RatMatrix inv = inverse(m.select(r.pivot_columns, r.pivot_columns));
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.rank; ++j)
            g(r.pivot_columns[i], r.pivot_columns[j]) = inv(i, j);
    return g;
}

enum class GInverseKind { pivot_block, moore_penrose };

inline RatMatrix g_inverse(const RatMatrix& m, GInverseKind kind) {
    return kind == GInverseKind::moore_penrose ? g_inverse(m) : g_inverse_pivot_block(m);
}

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

/// Gram-level form of project_out: given xtx = x'x, ztx = z'x and ztz = z'z,
/// returns x'(I - z (z'z)^- z')x = xtx - ztx' (ztz)^- ztx.
inline RatMatrix project_out_gram(const RatMatrix& xtx, const RatMatrix& ztx,
                                  const RatMatrix& ztz,
                                  GInverseKind kind = GInverseKind::pivot_block) {
    if (ztz.rows() == 0) return xtx;
    return xtx - ztx.transpose() * g_inverse(ztz, kind) * ztx;
}

/// x'(I - P_z)x where P_z is the orthogonal projector onto the column span
/// of z. Exact; symmetric positive semidefinite by construction. z may have
/// zero columns, in which case the result is x'x.
inline RatMatrix project_out(const RatMatrix& x, const RatMatrix& z,
                             GInverseKind kind = GInverseKind::pivot_block) {
    if (x.rows() != z.rows() && z.cols() != 0)
        throw std::invalid_argument("project_out: row count mismatch");
    const RatMatrix xt = x.transpose();
    if (z.cols() == 0) return xt * x;
    return project_out_gram(xt * x, z.transpose() * x, z.transpose() * z, kind);
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and spectra
// ---------------------------------------------------------------------------

/// Coefficients of det(lambda I - m), ascending degree, leading coefficient 1.
/// Faddeev-LeVerrier recurrence: exact in rationals, no pivoting.
inline std::vector<Rational> char_poly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
            mk = m * mk;
        }
        c[n - k] = -(mk.trace() / Rational(static_cast<long>(k)));
    }
    return c;
}

inline std::vector<Rational> poly_mul(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
    Rational v;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

/// Quotient of p by (lambda - root); requires root to be an exact root.
inline std::vector<Rational> poly_deflate(const std::vector<Rational>& p, const Rational& root) {
    std::vector<Rational> q(p.size() - 1);
    Rational carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + root * carry;
    }
    if (!carry.is_zero()) throw std::invalid_argument("poly_deflate: not a root");
    return q;
}

/// An eigenvalue with its algebraic multiplicity.
struct SpectrumEntry {
    Rational value;
    std::size_t multiplicity;
};

/// True iff det(lambda I - m) equals prod (lambda - v_i)^{m_i} exactly.
/// Throws if the multiplicities do not sum to the dimension.
inline bool verify_spectrum(const RatMatrix& m, const std::vector<SpectrumEntry>& claimed) {
    if (m.rows() != m.cols()) throw std::invalid_argument("verify_spectrum: matrix not square");
    std::size_t total = 0;
    for (const auto& e : claimed) total += e.multiplicity;
    if (total != m.rows())
        throw std::invalid_argument("verify_spectrum: multiplicities do not sum to the dimension");
    std::vector<Rational> prod{Rational(1)};
    for (const auto& e : claimed)
        for (std::size_t i = 0; i < e.multiplicity; ++i)
            prod = poly_mul(prod, {-e.value, Rational(1)});
    return prod == char_poly(m);
}

/// Multiplicity of `value` as a root of the characteristic polynomial of m.
inline std::size_t eigenvalue_multiplicity(const RatMatrix& m, const Rational& value) {
    auto p = char_poly(m);
    std::size_t mult = 0;
    while (p.size() > 1 && poly_eval(p, value).is_zero()) {
        p = poly_deflate(p, value);
        ++mult;
    }
    return mult;
}

/// Outcome of factoring a characteristic polynomial over the rationals:
/// the rational eigenvalues found (with multiplicities, ascending) and the
/// unfactored remainder ({1} when the spectrum is fully rational).
struct SpectrumFactorization {
    std::vector<SpectrumEntry> eigenvalues;
    std::vector<Rational> unfactored;

    bool complete() const { return unfactored.size() == 1; }
};

namespace detail {

/// Divisors of |n| by trial division; empty when n is too hard to factor
/// (a composite cofactor above the trial bound) or has too many divisors.
inline std::vector<mpz_class> divisors(mpz_class n, std::size_t cap = 4096) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, unsigned>> primes;
    for (unsigned long p = 2; p <= 1000000ul && mpz_class(p) * p <= n; p == 2 ? p = 3 : p += 2) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            primes.emplace_back(p, e);
        }
    }
    if (n > 1) {
        // cofactor: usable only if prime (otherwise divisors would be missed)
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return {};
        primes.emplace_back(n, 1);
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : primes) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * pk);
                if (divs.size() > cap) return {};
            }
        }
    }
    return divs;
}

}  // namespace detail

/// Factors char_poly(m) over the rationals by rational-root extraction.
/// Complete for every matrix whose spectrum is rational (all the built-in
/// families); otherwise returns the rational part plus the remainder.
inline SpectrumFactorization rational_spectrum(const RatMatrix& m) {
    SpectrumFactorization out;
    auto p = char_poly(m);

    auto add_root = [&out](const Rational& r) {
        for (auto& e : out.eigenvalues)
            if (e.value == r) {
                ++e.multiplicity;
                return;
            }
        out.eigenvalues.push_back({r, 1});
    };

    while (p.size() > 1 && p[0].is_zero()) {
        p = poly_deflate(p, Rational(0));
        add_root(Rational(0));
    }
    while (p.size() > 1) {
        // clear denominators: integer coefficients, leading L
        mpz_class lead(1);
        for (const auto& c : p) lead = lcm(lead, c.den());
        const mpz_class q0 = lead * p[0].num() / p[0].den();
        const auto nums = detail::divisors(q0);
        const auto dens = detail::divisors(lead);
        if (nums.empty() || dens.empty()) break;
        bool found = false;
        for (const auto& a : nums) {
            for (const auto& b : dens) {
                for (int sign : {1, -1}) {
                    const Rational cand(sign * a, b);
                    if (poly_eval(p, cand).is_zero()) {
                        p = poly_deflate(p, cand);
                        add_root(cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.unfactored = p;
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
    return out;
}

/// Renders a polynomial in the indeterminate `var`, highest degree first.
inline std::string poly_str(const std::vector<Rational>& p, const std::string& var = "x") {
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        const Rational a = p[i].abs();
        if (out.empty())
            out += p[i].is_negative() ? "-" : "";
        else
            out += p[i].is_negative() ? " - " : " + ";
        const bool unit = a == Rational(1) && i > 0;
        if (!unit) out += a.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

/// PSD test for a symmetric rational matrix via the characteristic polynomial
/// sign pattern: all eigenvalues of a real-rooted monic polynomial are >= 0
/// iff (-1)^{n-k} c_k >= 0 for every coefficient.
inline bool is_psd(const RatMatrix& m) {
    if (!m.is_symmetric()) return false;
    const auto c = char_poly(m);
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k <= n; ++k) {
        const int want = ((n - k) % 2 == 0) ? 1 : -1;
        if (!c[k].is_zero() && c[k].sign() != want) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Structured generators
// ---------------------------------------------------------------------------

/// Circulant matrix: row i is first_row cyclically right-shifted i places.
inline RatMatrix circulant(const std::vector<Rational>& first_row) {
    if (first_row.empty()) throw std::invalid_argument("circulant: empty first row");
    const std::size_t n = first_row.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - i) % n];
    return m;
}

/// All-ones matrix J_n.
inline RatMatrix jn(std::size_t n) {
    if (n == 0) throw std::invalid_argument("jn: n must be >= 1");
    return RatMatrix::ones(n, n);
}

/// Centering matrix K_n = I_n - (1/n) J_n.
inline RatMatrix kn(std::size_t n) {
    if (n == 0) throw std::invalid_argument("kn: n must be >= 1");
    RatMatrix m(n, n);
    const Rational off(-1, static_cast<long>(n));
    const Rational diag(static_cast<long>(n - 1), static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j) ? diag : off;
    return m;
}

}  // namespace omep
