#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "omep/constructions.hpp"
#include "omep/plan.hpp"

using namespace omep;

namespace {

Plan single_factor_plan() {
    Plan p;
    p.runs = 4;
    p.factors = {Factor{"A", 2, {"0", "1"}}};
    p.table = {{0, 1, 0, 1}};
    validate_plan(p);
    return p;
}

const Rational half(1, 2);
const Rational quarter(1, 4);

}  // namespace

TEST_CASE("plan validation") {
    Plan p = single_factor_plan();
    CHECK_NOTHROW(validate_plan(p));

    Plan bad = p;
    bad.table[0] = {0, 0, 0, 0};  // level 1 never occurs
    CHECK_THROWS_AS(validate_plan(bad), std::invalid_argument);

    bad = p;
    bad.table[0] = {0, 1, 0, 2};  // out of range
    CHECK_THROWS_AS(validate_plan(bad), std::invalid_argument);

    bad = p;
    bad.block_factor = "zz";
    CHECK_THROWS_AS(validate_plan(bad), std::invalid_argument);

    bad = p;
    bad.factors[0].levels = 1;
    bad.factors[0].labels = {"0"};
    CHECK_THROWS_AS(validate_plan(bad), std::invalid_argument);

    CHECK_THROWS_AS(p.index_of("missing"), std::invalid_argument);
}

TEST_CASE("replication") {
    const Plan a12 = build_a12(1);
    CHECK(replication_vector(a12, "A") == std::vector<std::size_t>{4, 4, 4});
    CHECK(replication_vector(a12, "D") == std::vector<std::size_t>{4, 4, 4});
    CHECK(replication_vector(a12, "E") == std::vector<std::size_t>{6, 6});

    // sums equal the run count on every factor of several plans
    for (const Plan& p : {build_a12(2), build_a8(), build_series(SeriesVariant::i, 5)})
        for (const auto& f : p.factors) {
            std::size_t total = 0;
            for (std::size_t r : replication_vector(p, f.name)) total += r;
            CHECK(total == p.runs);
        }

    // n blocks of size 4 in the series
    const Plan s5 = build_series(SeriesVariant::i, 5);
    CHECK(replication_vector(s5, "bl") == std::vector<std::size_t>{4, 4, 4, 4, 4});
    CHECK(replication_diag(s5, "bl") == Rational(4) * RatMatrix::identity(5));

    CHECK_THROWS_AS(replication_vector(a12, "X"), std::invalid_argument);
}

TEST_CASE("incidence") {
    const Plan s5 = build_series(SeriesVariant::i, 5);

    // n-level pairs follow the circulant pattern (2 1 0 0 1)
    const RatMatrix l = circulant({2, 1, 0, 0, 1});
    for (const char* p : {"A", "B", "C"})
        for (const char* q : {"A", "B", "C"})
            if (std::string(p) != q) CHECK(incidence(s5, p, q) == l);

    // block incidence is the doubled circulant (1 1 0 0 0), blocks as rows
    const RatMatrix m = Rational(2) * circulant({1, 1, 0, 0, 0});
    for (const char* p : {"A", "B", "C"}) {
        CHECK(incidence(s5, "bl", p) == m);
        CHECK(incidence(s5, p, "bl") == m.transpose());
    }

    // incidence with self is the replication diagonal
    for (const Plan& plan : {build_a12(1), build_a8(), s5})
        for (const auto& f : plan.factors)
            CHECK(incidence(plan, f.name, f.name) == replication_diag(plan, f.name));

    // row and column sums of N^{A,B} reproduce the replication vectors;
    // the grand total is the run count
    const Plan a12 = build_a12(1);
    const RatMatrix n_ab = incidence(a12, "A", "B");
    const auto ra = replication_vector(a12, "A");
    const auto rb = replication_vector(a12, "B");
    Rational grand;
    for (std::size_t i = 0; i < n_ab.rows(); ++i) {
        Rational row;
        for (std::size_t j = 0; j < n_ab.cols(); ++j) row += n_ab(i, j);
        CHECK(row == Rational(static_cast<long>(ra[i])));
        grand += row;
    }
    for (std::size_t j = 0; j < n_ab.cols(); ++j) {
        Rational col;
        for (std::size_t i = 0; i < n_ab.rows(); ++i) col += n_ab(i, j);
        CHECK(col == Rational(static_cast<long>(rb[j])));
    }
    CHECK(grand == Rational(12));
}

TEST_CASE("design_matrix") {
    CHECK(design_matrix(single_factor_plan(), "A") ==
          RatMatrix{{1, 0}, {0, 1}, {1, 0}, {0, 1}});

    const Plan a8 = build_a8();
    const RatMatrix x = design_matrix(a8, "A");
    CHECK(x.rows() == 8);
    CHECK(x.cols() == 3);
    // column sums = replication (4,2,2); row sums all 1
    const RatMatrix xt = x.transpose();
    CHECK(xt.row_sums() == std::vector<Rational>{4, 2, 2});
    for (const Rational& s : x.row_sums()) CHECK(s == Rational(1));

    // X_A' X_A = R^A and X_A' X_B = N^{A,B}
    CHECK(xt * x == replication_diag(a8, "A"));
    CHECK(xt * design_matrix(a8, "B") == incidence(a8, "A", "B"));
}

TEST_CASE("c_matrix on the 8-run plan") {
    const Plan a8 = build_a8();

    const RatMatrix c_b_given_a{{2, -1, -1}, {-1, 1, 0}, {-1, 0, 1}};
    CHECK(c_matrix(a8, "B", "B", {"A"}).matrix == c_b_given_a);

    // eliminating C as well changes nothing: the full C_B equals C_{B;A}
    CHECK(full_c_matrix(a8, "B") == c_b_given_a);
    CHECK(full_c_matrix(a8, "C") == c_b_given_a);

    const Rational sixth(1, 6);
    const RatMatrix c_a = sixth * RatMatrix{{4, -2, -2}, {-2, 7, -5}, {-2, -5, 7}};
    CHECK(full_c_matrix(a8, "A") == c_a);

    CHECK(verify_spectrum(c_b_given_a, {{Rational(0), 1}, {Rational(1), 1}, {Rational(3), 1}}));
    CHECK(verify_spectrum(c_a, {{Rational(0), 1}, {Rational(1), 1}, {Rational(2), 1}}));
}

TEST_CASE("c_matrix on the 12-run plans") {
    const Plan a12 = build_a12(1);
    for (const char* q : {"A", "B", "C"}) CHECK(full_c_matrix(a12, q) == Rational(3) * kn(3));
    // C_D = 2 K_3: confirmed by the circulant eigen-analysis (eigenvalues
    // 2(1-cos t)/(2+cos t) at t = 2*pi*j/3, i.e. {0, 2, 2}) and by every
    // alternative computation route below.
    CHECK(full_c_matrix(a12, "D") == Rational(2) * kn(3));
    CHECK(verify_spectrum(full_c_matrix(a12, "D"), {{Rational(0), 1}, {Rational(2), 2}}));

    // every C-matrix block with U = V is symmetric PSD with zero row sums
    for (const char* u : {"A", "D", "E"}) {
        const RatMatrix c = full_c_matrix(a12, u);
        CHECK(c.is_symmetric());
        CHECK(is_psd(c));
        for (const Rational& s : c.row_sums()) CHECK(s == Rational(0));
        CHECK(rank(c) <= c.rows() - 1);
    }
}

TEST_CASE("c_matrix argument errors") {
    const Plan a8 = build_a8();
    CHECK_THROWS_AS(c_matrix(a8, "A", "A", {"A"}), std::invalid_argument);
    CHECK_THROWS_AS(c_matrix(a8, "A", "B", {"B"}), std::invalid_argument);
    CHECK_THROWS_AS(c_matrix(a8, "A", "A", {"B", "B"}), std::invalid_argument);
    CHECK_THROWS_AS(c_matrix(a8, "A", "A", {"X"}), std::invalid_argument);
    CHECK_THROWS_AS(c_matrix(a8, "X", "A", {}), std::invalid_argument);
}

TEST_CASE("proportional frequency") {
    const Plan s5 = build_series(SeriesVariant::i, 5);
    for (const char* small : {"E", "F", "G"}) {
        for (const char* big : {"A", "B", "C"}) CHECK(is_proportional_frequency(s5, small, big));
        CHECK(is_proportional_frequency(s5, small, "bl"));
    }

    const Plan a12 = build_a12(1);
    CHECK_FALSE(is_proportional_frequency(a12, "A", "B"));
    CHECK(is_proportional_frequency(a12, "E", "A"));

    // a factor is never proportional-frequency orthogonal to itself
    for (const char* f : {"A", "E"}) CHECK_FALSE(is_proportional_frequency(a12, f, f));
}

TEST_CASE("orthogonal through") {
    const Plan a8 = build_a8();
    CHECK(orthogonal_through(a8, "B", "C", "A"));
    CHECK(orthogonal_through(a8, "C", "B", "A"));
    CHECK_FALSE(orthogonal_through(a8, "A", "B", "C"));

    const Plan a12 = build_a12(1);
    CHECK(orthogonal_through(a12, "A", "B", "D"));
    CHECK(orthogonal_through(a12, "B", "C", "D"));

    const Plan s5 = build_series(SeriesVariant::i, 5);
    CHECK(orthogonal_through(s5, "A", "B", "bl"));
    CHECK(orthogonal_through(s5, "B", "C", "bl"));

    CHECK_THROWS_AS(orthogonal_through(a8, "A", "A", "B"), std::invalid_argument);
}

TEST_CASE("orthogonality through a factor kills the adjusted block") {
    // for every ordered triple of two small plans
    for (const Plan& p : {build_a8(), build_a12(1)}) {
        const auto names = p.factor_names();
        for (const auto& a : names)
            for (const auto& b : names)
                for (const auto& c : names) {
                    if (a == b || b == c || a == c) continue;
                    if (orthogonal_through(p, a, b, c))
                        CHECK(c_matrix(p, a, b, {c}).matrix.is_zero());
                }
    }
}

TEST_CASE("same-block pair counts") {
    const Plan s5 = build_series(SeriesVariant::i, 5);
    // block size 4 and orthogonality through the block factor
    CHECK(same_block_pair_counts(s5, "A", "B") == Rational(4) * incidence(s5, "A", "B"));
    CHECK_THROWS_AS(same_block_pair_counts(build_a8(), "A", "B"), std::invalid_argument);
}

TEST_CASE("full C equals single-elimination C when orthogonal through it") {
    const Plan a12 = build_a12(1);
    for (const char* p : {"A", "B", "C"})
        CHECK(full_c_matrix(a12, p) == c_matrix(a12, p, p, {"D"}).matrix);

    const Plan s5 = build_series(SeriesVariant::i, 5);
    for (const char* q : {"A", "B", "C"})
        CHECK(full_c_matrix(s5, q) == c_matrix(s5, q, q, {"bl"}).matrix);
}

TEST_CASE("Gram-assembled C-matrices equal literal run-space projections") {
    for (const Plan& p : {build_a8(), build_a12(2), build_series(SeriesVariant::iii, 5)}) {
        const auto names = p.factor_names();
        for (const auto& u : names) {
            // z = [1 | X_W for all other W], x = X_U, projected in run space
            RatMatrix z = RatMatrix::ones(p.runs, 1);
            for (const auto& w : names)
                if (w != u) z = hstack(z, design_matrix(p, w));
            CHECK(project_out(design_matrix(p, u), z) == full_c_matrix(p, u));
        }
        // an off-diagonal block, both routes
        const RatMatrix x = hstack(design_matrix(p, names[0]), design_matrix(p, names[1]));
        RatMatrix z = RatMatrix::ones(p.runs, 1);
        z = hstack(z, design_matrix(p, names[2]));
        const std::size_t s0 = p.factors[0].levels;
        CHECK(project_out(x, z).block(0, s0, s0, p.factors[1].levels) ==
              c_matrix(p, names[0], names[1], {names[2]}).matrix);
    }
}

TEST_CASE("Schur-complement assembly equals direct projection") {
    const Plan a12 = build_a12(1);
    CHECK(c_matrix_via_schur(a12, "A", "D") == full_c_matrix(a12, "A"));
    CHECK(c_matrix_via_schur(a12, "A", "B") == full_c_matrix(a12, "A"));
    CHECK(c_matrix_via_schur(a12, "D", "A") == full_c_matrix(a12, "D"));

    const Plan a8 = build_a8();
    CHECK(c_matrix_via_schur(a8, "B", "A") == full_c_matrix(a8, "B"));
    CHECK(c_matrix_via_schur(a8, "A", "B") == full_c_matrix(a8, "A"));
}

TEST_CASE("g-inverse choice does not change C-matrices") {
    const Plan a8 = build_a8();
    const Plan a12 = build_a12(3);
    for (const auto& f : a8.factors)
        CHECK(full_c_matrix(a8, f.name, GInverseKind::pivot_block) ==
              full_c_matrix(a8, f.name, GInverseKind::moore_penrose));
    for (const char* f : {"A", "D", "E"})
        CHECK(full_c_matrix(a12, f, GInverseKind::pivot_block) ==
              full_c_matrix(a12, f, GInverseKind::moore_penrose));
}

TEST_CASE("elimination monotonicity") {
    const Plan a12 = build_a12(1);
    const std::vector<std::vector<std::string>> chains = {
        {}, {"B"}, {"B", "C"}, {"B", "C", "D"}, {"B", "C", "D", "E", "F", "G"}};
    RatMatrix prev;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const RatMatrix c = c_matrix(a12, "A", "A", chains[i]).matrix;
        if (i > 0) CHECK(is_psd(prev - c));
        prev = c;
    }
}

TEST_CASE("block designs") {
    const BlockDesign a = catalog_design('a');
    CHECK(is_binary(a));
    CHECK(is_connected(a));
    const RatMatrix cd = block_design_c_matrix(a);
    // replication 2, blocks of 4: diagonal 3/2, paired entries -1/2, rest -1/4
    for (std::size_t i = 0; i < 6; ++i) CHECK(cd(i, i) == Rational(3, 2));
    CHECK(cd(0, 1) == -half);
    CHECK(cd(2, 3) == -half);
    CHECK(cd(4, 5) == -half);
    CHECK(cd(0, 2) == -quarter);
    CHECK(cd(1, 4) == -quarter);
    for (const Rational& s : cd.row_sums()) CHECK(s == Rational(0));

    const BlockDesign b = catalog_design('b');
    CHECK(is_binary(b));
    CHECK(is_connected(b));

    BlockDesign disconnected;
    disconnected.treatments = 6;
    disconnected.blocks = {{0, 1, 2}, {3, 4, 5}};
    CHECK_FALSE(is_connected(disconnected));
    CHECK(rank(block_design_c_matrix(disconnected)) == 4);

    BlockDesign repeated;
    repeated.treatments = 3;
    repeated.blocks = {{0, 0, 1}, {1, 2, 2}};
    CHECK_FALSE(is_binary(repeated));

    BlockDesign empty;
    CHECK_THROWS_AS(validate_design(empty), std::invalid_argument);
    CHECK_THROWS_AS(block_design_c_matrix(empty), std::invalid_argument);
}

TEST_CASE("degrees of freedom") {
    CHECK(dof_summary(build_a12(1)) == DofSummary{12, 0});
    CHECK(dof_summary(build_a12(2)) == DofSummary{12, 0});
    CHECK(dof_summary(build_a12(3)) == DofSummary{12, 0});
    CHECK(dof_summary(build_series(SeriesVariant::i, 5)) == DofSummary{20, 0});
    CHECK(dof_summary(single_factor_plan()) == DofSummary{2, 2});
}
