#pragma once

#include "stackcoh/hom.hpp"
#include "stackcoh/module_descriptor.hpp"

namespace gcoh {

// Cohomology of a finite abelian group with trivial coefficients, computed
// from the total complex of one 2-periodic resolution per cyclic factor
// (terms indexed by compositions, differentials alternate 0 and the factor
// order), reduced by Smith normal form.
zlin::AbelianGroup periodic_cohomology_Z(const std::vector<Int>& factors, int r);

// Same complex with an arbitrary finitely generated coefficient group.
zlin::AbelianGroup periodic_cohomology(const std::vector<Int>& factors,
                                       const zlin::AbelianGroup& coeff, int r);

// Public operation: H^r of the abelian group with the given invariant
// factors, integer coefficients.
GroupValue abelian_cohomology_Z(const std::vector<Int>& factors, int r);

// H^r(A, Z) -> H^r(A x B, Z) induced by the projection A x B -> A, realized
// as the inclusion of the trivial-B row of the total complex.
zlin::AbelianHom product_projection_pullback(const std::vector<Int>& a_factors,
                                             const std::vector<Int>& b_factors, int r);

// coker of the pullback: H^r(A x Z/d, Z) / H^r(A, Z).
zlin::AbelianGroup product_quotient_term(const std::vector<Int>& a_factors, const Int& d, int r);

}  // namespace gcoh
