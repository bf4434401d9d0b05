#pragma once

#include <optional>
#include <vector>

#include "stackcoh/matrix.hpp"

namespace zlin {

// u * m * v = d with u, v unimodular, d diagonal, d(i,i) >= 0 and
// d(i,i) | d(i+1,i+1). u_inv and v_inv are tracked alongside so column spans
// and solutions can be read off without a separate inversion.
struct SmithForm {
    Mat u, d, v;
    Mat u_inv, v_inv;
    std::size_t rank = 0;            // number of nonzero diagonal entries
    std::vector<Int> divisors;       // the nonzero diagonal entries, in chain order
};

SmithForm smith_normal_form(const Mat& m);

// Diagonal divisors only; no transform bookkeeping. Same elimination, faster
// on large inputs.
std::vector<Int> smith_divisors(const Mat& m);

// Repeated solves / kernel queries against one matrix.
class SmithSolver {
  public:
    explicit SmithSolver(const Mat& m) : m_(m), f_(smith_normal_form(m)) {}

    const SmithForm& form() const { return f_; }

    // One solution x of m x = b, if any.
    std::optional<Mat> solve(const Mat& b) const;

    // Basis of {x : m x = 0}; columns. The basis is saturated (the kernel is
    // a direct summand of the domain).
    Mat kernel() const;

    // Basis of the column span of m.
    Mat column_space_basis() const;

  private:
    Mat m_;
    SmithForm f_;
};

inline Mat kernel(const Mat& m) { return SmithSolver(m).kernel(); }

// Reduce a generating set (columns) of a sublattice of Z^n to a basis.
Mat column_basis(const Mat& gens);

// Basis of {x : f x in colspan(l)}. Always contains colspan(l)'s preimage of 0.
Mat preimage_lattice(const Mat& f, const Mat& l);

Int det_sign_free(const Mat& square);  // determinant, for certificate checks

// Incremental basis of {x in Z^n : row_i . x == 0 (mod m_i) for all i}.
// Constraints arrive as sparse rows; modulus 0 means an exact equation.
// Useful when the constraint matrix is huge but sparse and the solution
// lattice is low-index.
class ConstraintKernel {
  public:
    using SparseRow = std::vector<std::pair<std::size_t, Int>>;

    explicit ConstraintKernel(std::size_t n) : basis_(Mat::identity(n)) {}

    void add(const SparseRow& row, const Int& modulus);

    const Mat& basis() const { return basis_; }

  private:
    Mat basis_;
};

}  // namespace zlin
