#pragma once

#include "stackcoh/bar.hpp"
#include "stackcoh/curve.hpp"
#include "stackcoh/values.hpp"

namespace stackcurve {

// Picard group of a smooth orbicurve (trivial or ignored generic
// stabilizer): for projective coarse, <h, t_1..t_N | d_l t_l = h> on top of
// the degree-zero part; for the affine line, <t_l | d_l t_l = 0>.
PicardValue picard_orbicurve(const CurveDescriptor& d);

// Table pipelines. Degrees: 0 -> global units, 1 -> Picard, even >= 2 -> 0,
// odd >= 3 -> the sum of the local cyclic groups.
CohomologyValue cohomology_orbicurve(const CurveDescriptor& d, int r);
CohomologyValue cohomology_twisted_nodal(const CurveDescriptor& d, int r);

// Product of the orbicurve with the classifying stack of an abelian generic
// stabilizer: degree 1 splits; degree >= 2 assembles three graded pieces
//   [H^r(G0, units), H^{r-1}(G0, Pic Y), sum_l H^{r-1}(G0 x Z/d_l)/H^{r-1}(G0)]
// resolved only under certified criteria.
CohomologyValue cohomology_trivial_gerbe(const CurveDescriptor& d, int r,
                                         const gcoh::BarBudget& budget = gcoh::BarBudget::from_env());

// All stabilizers cyclic: even degrees >= 2 reproduce the degree-2
// trivial-gerbe value; odd degrees >= 3 are the three-piece filtration
//   [H^2(G0, Pic Y), sum_l Z/d_l, Hom(G0, k*)].
CohomologyValue cohomology_cyclic_tower(const CurveDescriptor& d, int r,
                                        const gcoh::BarBudget& budget = gcoh::BarBudget::from_env());

// Degree-2 value over the affine line as the kernel of the componentwise
// transfer at the stacky points, with the full six-term audit of the
// factorization through the divisor map.
struct BetaFactorization {
    CohomologyValue h2;
    zlin::SixTermSequence audit;
    std::vector<std::string> notes;
};

BetaFactorization h2_via_beta_factorization(
    const CurveDescriptor& d, const gcoh::BarBudget& budget = gcoh::BarBudget::from_env(),
    const std::vector<zlin::AbelianHom>* supplied_transfers = nullptr);

// Compute the degree-2 value along the direct pipeline and along the
// trivial-gerbe companion, and report both with audits. Disagreements are
// reported, never reconciled.
struct CrosscheckReport {
    CohomologyValue direct;
    CohomologyValue gerbe_side;
    std::optional<zlin::SixTermSequence> direct_audit;
    enum class Verdict { equal, unequal, incomparable } verdict = Verdict::incomparable;
    bool abelian_stabilizers = true;
    std::vector<std::string> notes;
};

CrosscheckReport h2_abelian_crosscheck(const CurveDescriptor& d,
                                       const gcoh::BarBudget& budget = gcoh::BarBudget::from_env());

// H^2(Y, mu_n) = Pic(Y)/n, using that the degree-2 unit-sheaf cohomology of
// the orbicurve vanishes; the divisible part of Pic contributes nothing.
zlin::AbelianGroup kummer_h2(const CurveDescriptor& d, const Int& n);

// H^2(Y, G0) for abelian G0 = sum Z/d_h: one Pic(Y)/d_h per factor, and the
// statement that the root-construction map onto it is surjective.
struct GerbeDecomposition {
    zlin::AbelianGroup h2;
    std::vector<zlin::AbelianGroup> per_factor;
    std::string statement;
};

GerbeDecomposition gerbe_root_decomposition(const CurveDescriptor& d,
                                            const std::vector<Int>& factors);

// Route a descriptor to the pipeline its shape selects.
CohomologyValue cohomology(const CurveDescriptor& d, int r,
                           const gcoh::BarBudget& budget = gcoh::BarBudget::from_env());

}  // namespace stackcurve
