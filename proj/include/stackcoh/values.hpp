#pragma once

#include "stackcoh/extension.hpp"

namespace stackcurve {

using zlin::Int;

// Picard group of an orbicurve: an optional divisible summand (degree-zero
// part of a projective coarse curve) plus an exact discrete part.
struct PicardValue {
    std::optional<zlin::SymbolicSummand> divisible_part;
    zlin::AbelianGroup discrete_part;
    std::string provenance;

    zlin::GradedPiece as_piece() const {
        zlin::GradedPiece p;
        if (divisible_part) p.symbolic.push_back(*divisible_part);
        p.discrete = discrete_part;
        return p;
    }
};

// One cohomology group as a pipeline reports it: an exact value (possibly
// with symbolic summands), an unresolved filtration of graded pieces
// (innermost first), or a machine-readable refusal.
struct CohomologyValue {
    enum class Kind { exact, filtration, undetermined };

    int degree = 0;
    Kind kind = Kind::exact;
    zlin::GradedPiece value;
    std::vector<zlin::GradedPiece> filtration;
    std::string reason;      // undetermined only
    std::string provenance;
    std::string criterion;   // splitting rule when resolved from pieces
    std::vector<std::string> notes;

    bool resolved() const { return kind == Kind::exact; }
    bool with_symbolic() const { return kind == Kind::exact && !value.symbolic.empty(); }

    std::optional<Int> order() const {
        if (kind == Kind::exact) return value.order();
        if (kind == Kind::undetermined) return std::nullopt;
        Int o = 1;
        for (const auto& p : filtration) {
            auto po = p.order();
            if (!po) return std::nullopt;
            o *= *po;
        }
        return o;
    }

    static CohomologyValue exact_value(int r, zlin::GradedPiece p, std::string prov) {
        CohomologyValue v;
        v.degree = r;
        v.kind = Kind::exact;
        v.value = std::move(p);
        v.provenance = std::move(prov);
        return v;
    }
    static CohomologyValue from_extension(int r, const zlin::ExtensionResult& e, std::string prov) {
        CohomologyValue v;
        v.degree = r;
        v.provenance = std::move(prov);
        if (e.resolved) {
            v.kind = Kind::exact;
            v.value = e.group;
            v.criterion = e.criterion;
        } else {
            v.kind = Kind::filtration;
            v.filtration = e.filtration;
        }
        return v;
    }
    static CohomologyValue undetermined_value(int r, std::string why, std::string prov) {
        CohomologyValue v;
        v.degree = r;
        v.kind = Kind::undetermined;
        v.reason = std::move(why);
        v.provenance = std::move(prov);
        return v;
    }
};

}  // namespace stackcurve
