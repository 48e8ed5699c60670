// Walk-through of the library on three constructions: the 8-run plan with a
// pair of factors orthogonal through a third, the blocked series at n = 5,
// and the block-design composition that yields a 6^4 experiment on 12 blocks.

#include "omep/omep.hpp"

#include <iostream>

using namespace omep;

int main() {
    std::cout << "== 8-run plan for three 3-level factors ==\n";
    const Plan a8 = build_a8();
    std::cout << plan_to_text(a8) << "\n";
    std::cout << "B, C orthogonal through A: "
              << (orthogonal_through(a8, "B", "C", "A") ? "yes" : "no") << "\n";
    std::cout << "C_{B;A} (eliminating A only):\n"
              << c_matrix(a8, "B", "B", {"A"}).matrix.pretty();
    std::cout << "full C_B (eliminating A and C):\n" << full_c_matrix(a8, "B").pretty();
    std::cout << "the two agree because C soaks up nothing once A is gone.\n\n";

    std::cout << "== blocked series, n = 5, variant i ==\n";
    const Plan s5 = build_series(SeriesVariant::i, 5);
    std::cout << "factors:";
    for (const auto& f : s5.factors) std::cout << " " << f.name << "(" << f.levels << ")";
    std::cout << "  runs: " << s5.runs << "\n";
    std::cout << "incidence of A with B is the circulant\n" << incidence(s5, "A", "B").pretty();
    std::cout << "full C_A:\n" << full_c_matrix(s5, "A").pretty();
    const auto dof = dof_summary(s5);
    std::cout << "model df " << dof.model_df << ", residual " << dof.residual_df << "\n\n";

    std::cout << "== composition: design (a) with the OA on 4 symbols ==\n";
    const BlockDesign d = catalog_design('a');
    const Plan p = build_omep_bl(d);
    std::cout << "6^4 experiment on " << p.factor("bl").levels << " blocks of size 4, "
              << p.runs << " runs\n";
    const RatMatrix c_a = full_c_matrix(p, "A");
    std::cout << "full C_A:\n" << c_a.pretty();
    std::cout << "equals 4 * C_d: "
              << (c_a == Rational(4) * block_design_c_matrix(d) ? "yes" : "no") << "\n";
    const auto spec = rational_spectrum(c_a);
    std::cout << "spectrum:";
    for (const auto& e : spec.eigenvalues)
        std::cout << " " << e.value.str() << "^" << e.multiplicity;
    std::cout << "\n";
    return 0;
}
