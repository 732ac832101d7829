// Walks one signature through the library: invariants, derived tower and a
// torsion-free cover with solvable quotient.

#include <iostream>

#include "fgroup/fgroup.hpp"

int main()
{
    using namespace fgroup;

    const auto s = Signature::of(0, 0, {5, 6, 14});
    const auto report = invariants_report(s);
    std::cout << s.str() << "  chi = " << report.euler.str() << "  " << curvature_name(report.curvature)
              << "  |tors(ab)| = " << report.torsion_order << '\n';

    const auto tower = derived_tower(s, 2);
    for (const auto& step : tower.steps) {
        std::cout << "  derived step of index " << step.quotient_order << " -> " << step.signature.str() << '\n';
    }

    const auto chain = fn_chain(s);
    for (const auto& step : chain.steps) {
        std::cout << "  " << cover_kind_name(step.kind) << " -> " << step.result.subgroup.str() << '\n';
    }
    std::cout << "torsion-free after index " << chain.total_index << ", quotient derived length "
              << chain.quotient_derived_length << (certify_chain(chain).ok ? ", certified" : ", NOT certified")
              << '\n';
    return 0;
}
