#pragma once

#include <memory>

#include "stackcoh/budget.hpp"
#include "stackcoh/hom.hpp"
#include "stackcoh/module_descriptor.hpp"

namespace gcoh {

// Brute-force cohomology from the normalized bar cochain complex: functions
// on tuples of non-identity elements with the standard group differential,
// kernels and images extracted by exact integer linear algebra (Smith normal
// form over Z, Howell echelon mod prime powers). This is the artifact's
// independent oracle. |G|^r is capped by the budget.
GroupValue bar_cohomology(const FiniteGroup& g, const zlin::AbelianGroup& coeff, int r,
                          const BarBudget& budget = BarBudget::from_env());

// H^r with explicit cocycle representatives for the canonical generators and
// a coordinate routine for arbitrary cocycles. (|G|-1)^{r+1} is capped by
// the explicit budget.
struct CocycleSpace {
    int degree = 0;
    zlin::AbelianGroup group;
    zlin::Mat kernel_basis;             // ambient x t
    zlin::CanonicalizedQuotient quot;   // kernel coords -> canonical
    zlin::Mat reps;                     // ambient representatives of generators
    std::shared_ptr<zlin::SmithSolver> solver;

    // Canonical class coordinates of ambient cocycle columns.
    zlin::Mat classes_of(const zlin::Mat& cocycles) const;
};

CocycleSpace bar_classes(const FiniteGroup& g, const zlin::AbelianGroup& coeff, int r,
                         const BarBudget& budget = BarBudget::from_env());

// res: H^r(G, Z) -> H^r(H, Z), cochains precomposed with the inclusion.
HomValue restriction_map(const FiniteGroup& g, const std::vector<int>& subgroup_generators,
                         int r, const BarBudget& budget = BarBudget::from_env());
HomValue restriction_map(const FiniteGroup& g, const Subgroup& h, int r,
                         const BarBudget& budget = BarBudget::from_env());

// Transfer (corestriction) H^r(H, Z) -> H^r(G, Z) by coset-representative
// summation at cochain level. Beyond the explicit budget, falls back to the
// composition laws for cyclic-in-cyclic and factor-in-product inclusions.
HomValue transfer_map(const FiniteGroup& g, const std::vector<int>& subgroup_generators,
                      int r, const BarBudget& budget = BarBudget::from_env());
HomValue transfer_map(const FiniteGroup& g, const Subgroup& h, int r,
                      const BarBudget& budget = BarBudget::from_env());

// Cochain-level matrices, exposed for the verification suites.
zlin::Mat restriction_cochain_matrix(const FiniteGroup& g, const Subgroup& h, int r);
zlin::Mat transfer_cochain_matrix(const FiniteGroup& g, const Subgroup& h, int r);
zlin::Mat bar_differential_dense(const FiniteGroup& g, std::size_t coeff_gens, int r);

}  // namespace gcoh
