#pragma once

#include <stdexcept>

#include "stackcoh/extension.hpp"
#include "stackcoh/finite_group.hpp"
#include "stackcoh/hom.hpp"

namespace gcoh {

// How a result was obtained.
enum class Provenance { closed_form, periodic_resolution, bar_oracle, fallback_law };
const char* to_string(Provenance p);

struct WildInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coefficient module with trivial action: a finitely generated group, the
// unit group of the algebraically closed base field, or the degree-zero
// Picard group of a genus-g projective curve. The symbolic kinds are
// divisible with known n-torsion for n prime to the characteristic.
struct ModuleDescriptor {
    enum class Kind { finitely_generated, field_units, picard_zero };
    Kind kind = Kind::finitely_generated;
    zlin::AbelianGroup group;  // finitely_generated only
    long genus = 0;            // picard_zero only
    long characteristic = 0;   // symbolic kinds

    static ModuleDescriptor fg(zlin::AbelianGroup g) {
        return {Kind::finitely_generated, std::move(g), 0, 0};
    }
    static ModuleDescriptor units(long p) { return {Kind::field_units, {}, 0, p}; }
    static ModuleDescriptor picard0(long genus, long p) {
        return {Kind::picard_zero, {}, genus, p};
    }

    bool symbolic() const { return kind != Kind::finitely_generated; }

    // n-torsion subgroup; requires gcd(n, characteristic) = 1 for the
    // symbolic kinds (tameness).
    zlin::AbelianGroup torsion(const Int& n) const;
    // quotient by multiplication by n; zero for the divisible kinds.
    zlin::AbelianGroup quotient(const Int& n) const;
    // the module itself as a graded piece (symbolic marker or exact group)
    zlin::GradedPiece as_piece() const;
};

struct GroupValue {
    zlin::GradedPiece value;
    Provenance provenance = Provenance::closed_form;
};

struct HomValue {
    zlin::AbelianHom hom;
    Provenance provenance = Provenance::bar_oracle;
};

}  // namespace gcoh
