#pragma once

#include "stackcoh/module_descriptor.hpp"

namespace gcoh {

// Cyclic group cohomology with trivial action: the norm is multiplication by
// the order and the augmentation submodule vanishes, so
//   H^0 = M,  H^odd = M[d],  H^{even>0} = M / dM.
// Symbolic coefficients resolve through their torsion/divisibility laws.
GroupValue cyclic_cohomology(const Int& d, const ModuleDescriptor& m, int r);

// H^r(G, divisible coefficient) for abelian G via the dimension shift onto
// H^{r+1}(G, Z); picard_zero multiplies the answer 2g times. Requires r >= 1
// and tameness.
GroupValue divisible_cohomology(const FiniteGroup& g, const ModuleDescriptor& coeff, int r);

// Hom(G, k*): the prime-to-characteristic part of the abelianization; under
// tameness that is the whole abelianization (finite abelian groups are
// self-dual).
zlin::AbelianGroup hom_to_units(const FiniteGroup& g, long characteristic);

}  // namespace gcoh
