#include "stackcoh/closed_forms.hpp"

#include "stackcoh/periodic.hpp"

namespace gcoh {

using zlin::AbelianGroup;
using zlin::GradedPiece;

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::closed_form: return "closed_form";
        case Provenance::periodic_resolution: return "periodic_resolution";
        case Provenance::bar_oracle: return "bar_oracle";
        case Provenance::fallback_law: return "fallback_law";
    }
    return "?";
}

AbelianGroup ModuleDescriptor::torsion(const Int& n) const {
    switch (kind) {
        case Kind::finitely_generated:
            return zlin::torsion_subgroup(group, n);
        case Kind::field_units:
            if (characteristic > 0 && n % characteristic == 0)
                throw WildInput("torsion order divisible by the characteristic");
            return AbelianGroup::cyclic(n);
        case Kind::picard_zero:
            if (characteristic > 0 && n % characteristic == 0)
                throw WildInput("torsion order divisible by the characteristic");
            return zlin::direct_power(AbelianGroup::cyclic(n), 2 * static_cast<std::size_t>(genus));
    }
    return {};
}

AbelianGroup ModuleDescriptor::quotient(const Int& n) const {
    if (kind == Kind::finitely_generated) return zlin::quotient_by(group, n);
    return AbelianGroup::trivial();  // divisible
}

GradedPiece ModuleDescriptor::as_piece() const {
    switch (kind) {
        case Kind::finitely_generated:
            return GradedPiece::exact(group);
        case Kind::field_units:
            return GradedPiece::symbol(
                {zlin::SymbolicSummand::Kind::field_units, 0, characteristic});
        case Kind::picard_zero:
            if (genus == 0) return GradedPiece::exact(AbelianGroup::trivial());
            return GradedPiece::symbol(
                {zlin::SymbolicSummand::Kind::picard_zero, genus, characteristic});
    }
    return {};
}

GroupValue cyclic_cohomology(const Int& d, const ModuleDescriptor& m, int r) {
    if (d < 1) throw std::invalid_argument("cyclic order must be positive");
    if (r < 0) throw std::invalid_argument("negative degree");
    if (m.symbolic() && m.characteristic > 0 && d % m.characteristic == 0)
        throw WildInput("group order divisible by the characteristic");

    GroupValue out;
    out.provenance = Provenance::closed_form;
    if (r == 0)
        out.value = m.as_piece();
    else if (r % 2 == 1)
        out.value = GradedPiece::exact(m.torsion(d));
    else
        out.value = GradedPiece::exact(m.quotient(d));
    return out;
}

GroupValue divisible_cohomology(const FiniteGroup& g, const ModuleDescriptor& coeff, int r) {
    if (r < 1) throw std::invalid_argument("divisible_cohomology needs degree >= 1");
    if (!g.is_abelian()) throw std::invalid_argument("divisible_cohomology needs an abelian group");
    if (coeff.kind == ModuleDescriptor::Kind::finitely_generated)
        throw std::invalid_argument("coefficient must be a divisible descriptor");
    if (coeff.characteristic > 0 && g.order() % coeff.characteristic == 0)
        throw WildInput("group order divisible by the characteristic");

    // prime-to-p torsion of the divisible coefficient shifts one degree up
    AbelianGroup shifted = periodic_cohomology_Z(g.invariant_factors(), r + 1);
    GroupValue out;
    out.provenance = Provenance::periodic_resolution;
    if (coeff.kind == ModuleDescriptor::Kind::picard_zero)
        out.value = GradedPiece::exact(
            zlin::direct_power(shifted, 2 * static_cast<std::size_t>(coeff.genus)));
    else
        out.value = GradedPiece::exact(shifted);
    return out;
}

zlin::AbelianGroup hom_to_units(const FiniteGroup& g, long characteristic) {
    if (characteristic > 0 && g.order() % characteristic == 0)
        throw WildInput("group order divisible by the characteristic");
    return g.abelianization();
}

}  // namespace gcoh
