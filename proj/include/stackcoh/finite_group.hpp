#pragma once

#include <memory>
#include <vector>

#include "stackcoh/abelian.hpp"

namespace gcoh {

using zlin::Int;

// Finite group given as a cyclic order, an abelian invariant-factor chain, or
// an explicit multiplication table. Table groups are verified (associativity,
// identity, inverses) on construction. Immutable.
class FiniteGroup {
  public:
    enum class Kind { cyclic, abelian, table };

    struct Table {
        int n = 1;
        std::vector<int> mul;  // n*n row-major
        int identity = 0;
        std::vector<int> inverse;
        int at(int a, int b) const { return mul[a * n + b]; }
    };

    static FiniteGroup trivial() { return cyclic(1); }
    static FiniteGroup cyclic(const Int& d);
    // Any list of cyclic orders; canonicalized to the invariant-factor chain.
    static FiniteGroup abelian(const std::vector<Int>& cyclic_orders);
    static FiniteGroup from_table(const std::vector<std::vector<int>>& mul);
    // Dihedral group of order 2m: elements r^i s^eps, index i + m*eps.
    static FiniteGroup dihedral(int two_m);

    Kind kind() const { return kind_; }
    const Int& order() const { return order_; }
    bool is_trivial_group() const { return order_ == 1; }
    bool is_abelian() const;
    bool is_cyclic() const;  // structurally cyclic (checks tables too)

    // Invariant factors of the group when abelian.
    std::vector<Int> invariant_factors() const;

    bool has_materialized_table() const { return table_ != nullptr; }
    // Multiplication table; materialized for cyclic/abelian groups of order
    // <= 1024, already present for table groups.
    const Table& table() const;

    zlin::AbelianGroup abelianization() const;

    bool operator==(const FiniteGroup& o) const;

  private:
    FiniteGroup() = default;
    Kind kind_ = Kind::cyclic;
    Int order_ = 1;
    std::vector<Int> factors_;
    std::shared_ptr<const Table> table_;
};

// Subgroup generated by the listed element indices, closed under the table.
struct Subgroup {
    std::vector<int> elements;       // sorted parent indices
    std::vector<int> position;       // parent index -> position in elements, or -1
    FiniteGroup group = FiniteGroup::trivial();  // the subgroup as its own table group
    Int index = 1;                   // [G : H]
};

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& generators);

// Verify that `embedding` (indexed by h's elements) is an injective
// homomorphism h -> g; returns the image subgroup.
Subgroup verified_embedding(const FiniteGroup& g, const FiniteGroup& h,
                            const std::vector<int>& embedding);

}  // namespace gcoh
