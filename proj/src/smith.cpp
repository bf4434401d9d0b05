#include "stackcoh/smith.hpp"

#include <cassert>

namespace zlin {

namespace {

// Transform bookkeeping for row/column operations. Inverse transforms get the
// inverse elementary operation on the other side.
struct Transforms {
    bool track;
    Mat u, u_inv, v, v_inv;

    void init(std::size_t r, std::size_t c, bool want) {
        track = want;
        if (!track) return;
        u = Mat::identity(r);
        u_inv = Mat::identity(r);
        v = Mat::identity(c);
        v_inv = Mat::identity(c);
    }
    void swap_rows(std::size_t i, std::size_t j) {
        if (!track || i == j) return;
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (!track || i == j) return;
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    void row_axpy(std::size_t i, std::size_t j, const Int& c) {
        if (!track) return;
        u.row_axpy(i, j, c);
        u_inv.col_axpy(j, i, -c);
    }
    void col_axpy(std::size_t i, std::size_t j, const Int& c) {
        if (!track) return;
        v.col_axpy(i, j, c);
        v_inv.row_axpy(j, i, -c);
    }
    void negate_row(std::size_t i) {
        if (!track) return;
        u.negate_row(i);
        u_inv.negate_col(i);
    }
    void negate_col(std::size_t j) {
        if (!track) return;
        v.negate_col(j);
        v_inv.negate_row(j);
    }
};

// Find a nonzero pivot in the trailing submatrix, preferring +-1, otherwise
// minimal absolute value. Returns false when the submatrix is zero.
bool find_pivot(const Mat& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Int& x = a(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

void smith_core(Mat a, bool track, SmithForm& out) {
    const std::size_t r = a.rows(), c = a.cols();
    Transforms tr;
    tr.init(r, c, track);

    std::size_t t = 0;
    const std::size_t bound = std::min(r, c);
    while (t < bound) {
        std::size_t pi, pj;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        tr.swap_rows(t, pi);
        a.swap_cols(t, pj);
        tr.swap_cols(t, pj);

        for (;;) {
            // Clear the pivot column.
            bool redo = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                Int q = div_round(a(i, t), a(t, t));
                a.row_axpy(i, t, -q);
                tr.row_axpy(i, t, -q);
                if (a(i, t) != 0) {
                    // Remainder is strictly smaller; make it the pivot.
                    a.swap_rows(t, i);
                    tr.swap_rows(t, i);
                    redo = true;
                }
            }
            if (redo) continue;
            // Clear the pivot row.
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                Int q = div_round(a(t, j), a(t, t));
                a.col_axpy(j, t, -q);
                tr.col_axpy(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    tr.swap_cols(t, j);
                    redo = true;
                }
            }
            if (redo) continue;

            // Everything in the trailing block must be divisible by the
            // pivot; that yields the divisor chain. A unit pivot divides
            // everything, skip the scan.
            Int piv = abs(a(t, t));
            if (piv != 1) {
                bool fixed = false;
                for (std::size_t i = t + 1; i < r && !fixed; ++i)
                    for (std::size_t j = t + 1; j < c && !fixed; ++j)
                        if (a(i, j) % piv != 0) {
                            a.row_axpy(t, i, 1);
                            tr.row_axpy(t, i, 1);
                            fixed = true;
                        }
                if (fixed) continue;
            }
            break;
        }

        if (a(t, t) < 0) {
            a.negate_row(t);
            tr.negate_row(t);
        }
        ++t;
    }

    out.rank = 0;
    out.divisors.clear();
    for (std::size_t i = 0; i < bound; ++i) {
        if (a(i, i) != 0) {
            out.divisors.push_back(a(i, i));
            ++out.rank;
        }
    }
    out.d = std::move(a);
    if (track) {
        out.u = std::move(tr.u);
        out.u_inv = std::move(tr.u_inv);
        out.v = std::move(tr.v);
        out.v_inv = std::move(tr.v_inv);
    }
}

}  // namespace

SmithForm smith_normal_form(const Mat& m) {
    SmithForm f;
    smith_core(m, true, f);
    return f;
}

std::vector<Int> smith_divisors(const Mat& m) {
    SmithForm f;
    smith_core(m, false, f);
    return f.divisors;
}

std::optional<Mat> SmithSolver::solve(const Mat& b) const {
    if (b.rows() != m_.rows()) throw DimensionMismatch("solve: rhs shape");
    Mat y = f_.u * b;                      // d * (v_inv x) = u b
    Mat z(m_.cols(), b.cols());
    for (std::size_t k = 0; k < b.cols(); ++k) {
        for (std::size_t i = 0; i < y.rows(); ++i) {
            const Int& yi = y(i, k);
            if (i < f_.rank) {
                const Int& di = f_.d(i, i);
                if (yi % di != 0) return std::nullopt;
                z(i, k) = yi / di;
            } else if (yi != 0) {
                return std::nullopt;
            }
        }
    }
    return f_.v * z;
}

Mat SmithSolver::kernel() const {
    std::vector<std::size_t> idx;
    for (std::size_t j = f_.rank; j < m_.cols(); ++j) idx.push_back(j);
    return f_.v.columns(idx);
}

Mat SmithSolver::column_space_basis() const {
    // colspan(m) = u_inv * colspan(d)
    Mat b(m_.rows(), f_.rank);
    for (std::size_t j = 0; j < f_.rank; ++j) {
        const Int& dj = f_.d(j, j);
        for (std::size_t i = 0; i < m_.rows(); ++i) b(i, j) = f_.u_inv(i, j) * dj;
    }
    return b;
}

Mat column_basis(const Mat& gens) {
    if (gens.cols() == 0) return Mat(gens.rows(), 0);
    return SmithSolver(gens).column_space_basis();
}

Mat preimage_lattice(const Mat& f, const Mat& l) {
    if (l.cols() != 0 && l.rows() != f.rows())
        throw DimensionMismatch("preimage_lattice: shape");
    Mat stacked = f.hcat(l.negated());
    Mat k = kernel(stacked);
    // Project to the f-block and reduce the generating set to a basis.
    Mat proj(f.cols(), k.cols());
    for (std::size_t i = 0; i < f.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) proj(i, j) = k(i, j);
    return column_basis(proj);
}

void ConstraintKernel::add(const SparseRow& row, const Int& modulus) {
    const std::size_t k = basis_.cols();
    if (k == 0) return;

    // Symmetric representative keeps the gcd chain shrinking.
    auto normalize = [&](Int x) {
        if (modulus == 0) return x;
        x = mod_floor(x, modulus);
        if (2 * x > modulus) x -= modulus;
        return x;
    };

    std::vector<Int> v(k);
    for (const auto& [i, c] : row) {
        if (c == 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
            const Int& b = basis_(i, j);
            if (b != 0) v[j] += c * b;
        }
    }
    for (auto& x : v) x = normalize(x);

    std::size_t lead = k;
    for (;;) {
        lead = k;
        for (std::size_t j = 0; j < k; ++j)
            if (v[j] != 0 && (lead == k || abs(v[j]) < abs(v[lead]))) lead = j;
        if (lead == k) return;  // constraint already satisfied
        bool again = false;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == lead || v[j] == 0) continue;
            Int q = div_round(v[j], v[lead]);
            v[j] = normalize(v[j] - q * v[lead]);
            basis_.col_axpy(j, lead, -q);
            if (v[j] != 0) again = true;
        }
        if (!again) break;
    }

    if (modulus == 0) {
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < k; ++j)
            if (j != lead) keep.push_back(j);
        basis_ = basis_.columns(keep);
    } else {
        Int g = gcd(abs(v[lead]), modulus);
        Int scale = modulus / g;
        if (scale > 1)
            for (std::size_t i = 0; i < basis_.rows(); ++i) basis_(i, lead) *= scale;
    }
}

Int det_sign_free(const Mat& m) {
    assert(m.rows() == m.cols());
    // Fraction-free Gaussian elimination (Bareiss).
    Mat a = m;
    std::size_t n = a.rows();
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            a.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return n == 0 ? sign : sign * a(n - 1, n - 1);
}

}  // namespace zlin
