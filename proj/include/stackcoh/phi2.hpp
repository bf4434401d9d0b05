#pragma once

#include "stackcoh/bar.hpp"

namespace gcoh {

// A bounded cochain complex of finitely generated abelian groups with
// trivial G-action; differentials compose to zero (checked).
struct CochainComplexSpec {
    std::vector<zlin::AbelianGroup> terms;
    std::vector<zlin::AbelianHom> differentials;  // terms[i] -> terms[i+1]

    void validate() const;
};

// The degree-2 comparison map out of H^p(G, H^q(J)): lift a group cocycle
// valued in H^q(J) to cocycle representatives in J^q, apply the group
// differential, divide by the complex differential, apply the group
// differential again and project to H^{q-1}(J). Constructed literally; the
// report records the resulting matrix and whether it vanishes.
struct Phi2Report {
    zlin::AbelianGroup source;  // H^p(G, H^q(J))
    zlin::AbelianGroup target;  // H^{p+2}(G, H^{q-1}(J))
    zlin::Mat matrix;           // target gens x source gens
    bool is_zero = false;
};

Phi2Report phi2_vanishing_check(const FiniteGroup& g, const CochainComplexSpec& j, int p, int q,
                                const BarBudget& budget = BarBudget::from_env());

}  // namespace gcoh
