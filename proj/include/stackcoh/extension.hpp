#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stackcoh/abelian.hpp"

namespace zlin {

// Named infinite summands that have no finite presentation: the unit group of
// the (algebraically closed) base field, the degree-zero Picard group of a
// genus-g projective curve, and the Picard group of a coarse nodal curve.
struct SymbolicSummand {
    enum class Kind { field_units, picard_zero, coarse_picard };
    Kind kind = Kind::field_units;
    long genus = 0;
    long characteristic = 0;

    bool operator==(const SymbolicSummand&) const = default;

    // field_units and picard_zero are divisible, hence injective: extensions
    // with them as subobject split.
    bool divisible() const { return kind != Kind::coarse_picard; }
};

std::string to_string(const SymbolicSummand& s);

// One graded piece of a cohomology value: optional symbolic summands plus an
// exact finitely generated part.
struct GradedPiece {
    std::vector<SymbolicSummand> symbolic;
    AbelianGroup discrete;

    bool operator==(const GradedPiece&) const = default;

    bool is_exact() const { return symbolic.empty(); }
    bool is_trivial() const { return symbolic.empty() && discrete.is_trivial(); }
    bool fully_divisible() const {
        if (!discrete.is_trivial()) return false;
        for (const auto& s : symbolic)
            if (!s.divisible()) return false;
        return !symbolic.empty();
    }
    std::optional<Int> order() const {
        if (!symbolic.empty() || !discrete.is_finite()) return std::nullopt;
        return discrete.order();
    }

    static GradedPiece exact(AbelianGroup g) { return {{}, std::move(g)}; }
    static GradedPiece symbol(SymbolicSummand s) { return {{std::move(s)}, {}}; }
};

GradedPiece piece_direct_sum(const GradedPiece& a, const GradedPiece& b);
std::string to_string(const GradedPiece& p);

// Outcome of an extension 0 -> sub -> E -> quot -> 0. Resolved only under a
// certified splitting criterion; otherwise the graded pieces are reported
// as-is, sub first. Candidate middle groups are never invented.
struct ExtensionResult {
    bool resolved = false;
    GradedPiece group;                  // meaningful when resolved
    std::vector<GradedPiece> filtration;
    std::optional<Int> order;           // product of piece orders when all finite
    std::string criterion;              // splitting rule that fired, or "none"
};

// Splitting criteria: either piece trivial; quotient free; subobject fully
// divisible; both finite of coprime order.
ExtensionResult resolve_extension(const GradedPiece& sub, const GradedPiece& quot);

// Fold a filtration (innermost piece first) through resolve_extension,
// resolving only while every step is certified.
ExtensionResult resolve_filtration(const std::vector<GradedPiece>& pieces);

}  // namespace zlin
