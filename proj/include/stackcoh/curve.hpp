#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stackcoh/finite_group.hpp"

namespace stackcurve {

using zlin::Int;

// Explicit stabilizer at a stacky point: a table group with a verified
// embedding of the generic stabilizer of index equal to the point's order.
struct StabilizerSpec {
    gcoh::FiniteGroup group = gcoh::FiniteGroup::trivial();
    std::vector<int> embedding;  // image of each generic-stabilizer element
};

struct StackyPoint {
    std::string label;
    Int index = 2;  // local root order d >= 2
    bool node = false;
    std::optional<StabilizerSpec> stabilizer;
};

struct CoarseCurve {
    enum class Kind { projective, affine_line, nodal_projective };
    Kind kind = Kind::projective;
    long genus = 0;                          // projective
    std::vector<long> normalization_genera;  // nodal_projective
    long node_count = 0;                     // nodal_projective
};

enum class GerbeKind { trivial_product, cyclic_tower, explicit_table };

// Finite combinatorial model of a tame one-dimensional stack: coarse curve,
// generic stabilizer, stacky points and the gerbe shape over the orbicurve.
struct CurveDescriptor {
    long characteristic = 0;
    CoarseCurve coarse;
    gcoh::FiniteGroup generic_stabilizer = gcoh::FiniteGroup::trivial();
    std::vector<StackyPoint> points;
    GerbeKind gerbe = GerbeKind::trivial_product;

    bool nodal() const { return coarse.kind == CoarseCurve::Kind::nodal_projective; }
    // order of the full stabilizer at point i
    Int stabilizer_order(std::size_t i) const {
        return generic_stabilizer.order() * points[i].index;
    }
};

struct ValidationError : std::runtime_error {
    std::vector<std::string> problems;
    explicit ValidationError(std::vector<std::string> p);
};

// Establish every descriptor invariant or throw a ValidationError listing
// all problems found.
void validate_descriptor(const CurveDescriptor& d);

// Diagnostics without throwing.
std::vector<std::string> descriptor_problems(const CurveDescriptor& d);

}  // namespace stackcurve
