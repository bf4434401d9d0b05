#pragma once

#include <string>
#include <vector>

#include "stackcoh/smith.hpp"

namespace zlin {

// Finitely generated abelian group in canonical form: free rank plus the
// invariant-factor chain d1 | d2 | ... (each >= 2). Isomorphism is field
// equality. Canonical generators are ordered torsion-first, free last.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    bool operator==(const AbelianGroup&) const = default;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;  // finite groups only
    std::size_t gens() const { return invariant_factors.size() + free_rank; }

    // Order of the i-th canonical generator; 0 marks a free generator.
    Int gen_order(std::size_t i) const {
        return i < invariant_factors.size() ? invariant_factors[i] : Int(0);
    }

    // Relation columns of the canonical presentation: d_i * e_i.
    Mat presentation() const;

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup free(std::size_t n) { return {n, {}}; }
    static AbelianGroup cyclic(const Int& d);
};

// "Z^2 + Z/2 + Z/6", "0" for the trivial group.
std::string to_string(const AbelianGroup& g);

// Quotient Z^n / colspan(relations) together with the coordinate change onto
// canonical generators.
struct CanonicalizedQuotient {
    AbelianGroup group;
    Mat to_canonical;    // gens() x n
    Mat from_canonical;  // n x gens(), a section of to_canonical

    // Reduce canonical coordinates modulo the generator orders.
    Mat reduce(const Mat& coords) const;
    // Canonical class of a vector (or columns of vectors) in Z^n.
    Mat classify(const Mat& ambient) const { return reduce(to_canonical * ambient); }
};

CanonicalizedQuotient canonicalize_quotient(std::size_t n, const Mat& relation_columns);

// Cokernel of a relations-as-rows matrix with `generators` columns.
AbelianGroup group_from_presentation(std::size_t generators, const Mat& relations);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup direct_power(const AbelianGroup& a, std::size_t n);

// Canonicalizing a direct sum can mix the block generators; these matrices
// translate between the summands and the canonical generators of the sum.
struct DirectSumData {
    AbelianGroup sum;
    Mat embed_a, embed_b;      // sum.gens() x a.gens() / b.gens()
    Mat project_a, project_b;  // a.gens() x sum.gens() / b side
};

DirectSumData direct_sum_data(const AbelianGroup& a, const AbelianGroup& b);

// d-torsion subgroup and quotient by d (trivial action calculus).
AbelianGroup torsion_subgroup(const AbelianGroup& a, const Int& d);
AbelianGroup quotient_by(const AbelianGroup& a, const Int& d);

}  // namespace zlin
