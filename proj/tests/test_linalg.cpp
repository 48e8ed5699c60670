#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omep/matrix.hpp"

#include <random>

using namespace omep;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    auto id = rref(RatMatrix::identity(3));
    CHECK(id.reduced == RatMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1, 2});

    auto z = rref(RatMatrix::zeros(2, 2));
    CHECK(z.reduced == RatMatrix::zeros(2, 2));
    CHECK(z.rank == 0);
    CHECK(z.pivot_columns.empty());

    // K_3 annihilates exactly the all-ones direction.
    CHECK(rank(kn(3)) == 2);

    RatMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
    auto r = rref(m);
    CHECK(r.rank == 2);
    // RREF is canonical: pivot rows are unit vectors at the pivot columns.
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t k = 0; k < r.rank; ++k)
            CHECK(r.reduced(i, r.pivot_columns[k]) == Rational(i == k ? 1 : 0));
}

TEST_CASE("determinant and inverse") {
    RatMatrix m{{2, 1}, {1, 1}};
    CHECK(determinant(m) == Rational(1));
    CHECK(inverse(m) * m == RatMatrix::identity(2));
    CHECK(determinant(kn(3)) == Rational(0));
    CHECK_THROWS_AS(inverse(kn(3)), std::domain_error);
    CHECK_THROWS_AS(inverse(RatMatrix::zeros(2, 3)), std::invalid_argument);
}

TEST_CASE("exact arithmetic survives large intermediate growth") {
    // 12x12 Hilbert matrix: its determinant is 1 over a 78-digit integer,
    // far beyond any fixed-width type
    const std::size_t n = 12;
    RatMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = Rational(1, static_cast<long>(i + j + 1));
    const RatMatrix inv = inverse(h);
    CHECK(h * inv == RatMatrix::identity(n));
    CHECK(rank(h) == n);
    const Rational det = determinant(h);
    CHECK(det * determinant(inv) == Rational(1));
    CHECK(det.num() == 1);
    CHECK(det.den().get_str().size() == 78);
}

TEST_CASE("g_inverse on fixed cases") {
    CHECK(g_inverse(RatMatrix::identity(3)) == RatMatrix::identity(3));
    // K_n is idempotent, hence its own Moore-Penrose inverse.
    const RatMatrix k3 = kn(3);
    CHECK(k3 * k3 == k3);
    CHECK(g_inverse(k3) == k3);
    CHECK(k3 * g_inverse(k3) * k3 == k3);
    // zeros: g = 0 satisfies m g m = m.
    const RatMatrix z = RatMatrix::zeros(2, 2);
    CHECK(g_inverse(z) == z);
    CHECK(g_inverse_pivot_block(k3) * k3 * g_inverse_pivot_block(k3) != RatMatrix::zeros(3, 3));
    CHECK(k3 * g_inverse_pivot_block(k3) * k3 == k3);
}

TEST_CASE("g_inverse identity on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const RatMatrix m = random_matrix(rng, dim(rng), dim(rng));
        const RatMatrix g = g_inverse(m);
        CHECK(m * g * m == m);
        // Moore-Penrose extras.
        CHECK(g * m * g == g);
        CHECK((m * g).transpose() == m * g);
        CHECK((g * m).transpose() == g * m);
        // pivot-block variant on the PSD Gram of m.
        const RatMatrix gram = m.transpose() * m;
        const RatMatrix gp = g_inverse_pivot_block(gram);
        CHECK(gram * gp * gram == gram);
    }
}

TEST_CASE("project_out") {
    std::mt19937 rng(99);
    const RatMatrix x = random_matrix(rng, 6, 3);

    // no columns to eliminate: x'x
    CHECK(project_out(x, RatMatrix(6, 0)) == x.transpose() * x);

    // projecting x out of itself: zero
    CHECK(project_out(x, x).is_zero());

    // columns of x orthogonal to z: projection changes nothing
    RatMatrix z(4, 1), x2(4, 2);
    z(0, 0) = 1; z(1, 0) = 1;
    x2(0, 0) = 1; x2(1, 0) = -1;
    x2(2, 1) = 3; x2(3, 1) = 5;
    CHECK(project_out(x2, z) == x2.transpose() * x2);

    CHECK_THROWS_AS(project_out(x, RatMatrix::ones(5, 1)), std::invalid_argument);

    // symmetric PSD output; difference from x'x is PSD too
    const RatMatrix zr = random_matrix(rng, 6, 2);
    const RatMatrix p = project_out(x, zr);
    CHECK(p.is_symmetric());
    CHECK(is_psd(p));
    CHECK(is_psd(x.transpose() * x - p));

    // both g-inverse kinds agree
    CHECK(project_out(x, zr, GInverseKind::moore_penrose) == p);
}

TEST_CASE("char_poly fixed cases") {
    // K_2: lambda^2 - lambda
    CHECK(char_poly(kn(2)) == std::vector<Rational>{0, -1, 1});
    // 3 K_3: lambda^3 - 6 lambda^2 + 9 lambda = lambda (lambda - 3)^2
    CHECK(char_poly(Rational(3) * kn(3)) == std::vector<Rational>{0, 9, -6, 1});
    // zero n x n: lambda^n
    CHECK(char_poly(RatMatrix::zeros(4, 4)) == std::vector<Rational>{0, 0, 0, 0, 1});
    CHECK_THROWS_AS(char_poly(RatMatrix::zeros(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly trace and determinant identities") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        const std::size_t n = dim(rng);
        const RatMatrix m = random_matrix(rng, n, n);
        const auto c = char_poly(m);
        REQUIRE(c.size() == n + 1);
        CHECK(c[n] == Rational(1));
        CHECK(c[n - 1] == -m.trace());
        const Rational sign(n % 2 == 0 ? 1 : -1);
        CHECK(c[0] == sign * determinant(m));
    }
}

TEST_CASE("verify_spectrum") {
    CHECK(verify_spectrum(Rational(3) * kn(3), {{Rational(0), 1}, {Rational(3), 2}}));
    CHECK(verify_spectrum(kn(2), {{Rational(0), 1}, {Rational(1), 1}}));
    CHECK_FALSE(verify_spectrum(kn(2), {{Rational(0), 2}}));
    CHECK_THROWS_AS(verify_spectrum(kn(2), {{Rational(0), 1}}), std::invalid_argument);
}

TEST_CASE("eigenvalue multiplicity and deflation") {
    const RatMatrix m = Rational(3) * kn(3);
    CHECK(eigenvalue_multiplicity(m, Rational(3)) == 2);
    CHECK(eigenvalue_multiplicity(m, Rational(0)) == 1);
    CHECK(eigenvalue_multiplicity(m, Rational(7)) == 0);
    CHECK_THROWS_AS(poly_deflate(char_poly(m), Rational(5)), std::invalid_argument);
}

TEST_CASE("rational spectrum extraction") {
    const auto s1 = rational_spectrum(Rational(3) * kn(3));
    CHECK(s1.complete());
    REQUIRE(s1.eigenvalues.size() == 2);
    CHECK(s1.eigenvalues[0].value == Rational(0));
    CHECK(s1.eigenvalues[0].multiplicity == 1);
    CHECK(s1.eigenvalues[1].value == Rational(3));
    CHECK(s1.eigenvalues[1].multiplicity == 2);

    // fractional eigenvalues are recovered too
    const auto s2 = rational_spectrum(Rational(1, 3) * kn(2));
    CHECK(s2.complete());
    REQUIRE(s2.eigenvalues.size() == 2);
    CHECK(s2.eigenvalues[1].value == Rational(1, 3));

    // golden-ratio spectrum: nothing rational to extract
    const auto s3 = rational_spectrum(RatMatrix{{0, 1}, {1, 1}});
    CHECK_FALSE(s3.complete());
    CHECK(s3.eigenvalues.empty());
    CHECK(s3.unfactored == std::vector<Rational>{-1, -1, 1});

    // mixed: one rational eigenvalue, quadratic remainder
    const auto s4 = rational_spectrum(RatMatrix{{0, 1, 0}, {1, 1, 0}, {0, 0, 5}});
    CHECK_FALSE(s4.complete());
    REQUIRE(s4.eigenvalues.size() == 1);
    CHECK(s4.eigenvalues[0].value == Rational(5));
}

TEST_CASE("poly_str") {
    CHECK(poly_str(char_poly(Rational(3) * kn(3))) == "x^3 - 6*x^2 + 9*x");
    CHECK(poly_str({0, 0, 1}, "l") == "l^2");
    CHECK(poly_str({Rational(-1, 2), 1}) == "x - 1/2");
    CHECK(poly_str({}) == "0");
    CHECK(poly_str({0}) == "0");
}

TEST_CASE("circulant, kn, jn") {
    CHECK(circulant({2, 1, 1}) == RatMatrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    CHECK(kn(2) == RatMatrix{{Rational(1, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(1, 2)}});
    CHECK(jn(2) == RatMatrix::ones(2, 2));

    // the n=5 incidence pattern used by the blocked series
    const RatMatrix l = circulant({2, 1, 0, 0, 1});
    CHECK(l(0, 1) == Rational(1));
    CHECK(l(0, 4) == Rational(1));
    CHECK(l(3, 3) == Rational(2));
    CHECK(l.is_symmetric());

    // circulants commute with the cyclic shift
    std::vector<Rational> shift_row{0, 1, 0, 0, 0};
    const RatMatrix s = circulant(shift_row);
    CHECK(s * l == l * s);
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> val(-5, 5);
    std::vector<Rational> row(6);
    for (auto& v : row) v = val(rng);
    const RatMatrix c = circulant(row);
    std::vector<Rational> shift6{0, 1, 0, 0, 0, 0};
    const RatMatrix s6 = circulant(shift6);
    CHECK(s6 * c == c * s6);

    // kn idempotent for several n
    for (std::size_t n = 1; n <= 7; ++n) CHECK(kn(n) * kn(n) == kn(n));
}

TEST_CASE("is_psd") {
    CHECK(is_psd(kn(4)));
    CHECK(is_psd(RatMatrix::zeros(3, 3)));
    CHECK_FALSE(is_psd(Rational(-1) * kn(4)));
    RatMatrix asym{{1, 2}, {0, 1}};
    CHECK_FALSE(is_psd(asym));
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const RatMatrix b = random_matrix(rng, 4, 3);
        CHECK(is_psd(b.transpose() * b));
    }
}

TEST_CASE("matrix plumbing") {
    RatMatrix m{{1, 2}, {3, 4}};
    CHECK(m.transpose() == RatMatrix{{1, 3}, {2, 4}});
    CHECK(m.trace() == Rational(5));
    CHECK(hstack(m, RatMatrix::identity(2)).cols() == 4);
    CHECK(vstack(m, RatMatrix::identity(2)).rows() == 4);
    CHECK(m.block(0, 1, 2, 1) == RatMatrix{{2}, {4}});
    CHECK(m.str() == "[[1, 2], [3, 4]]");
    CHECK(m.row_sums() == std::vector<Rational>{3, 7});
    CHECK_THROWS_AS(m + RatMatrix::identity(3), std::invalid_argument);
    CHECK_THROWS_AS(RatMatrix({{1, 2}, {3}}), std::invalid_argument);
}
