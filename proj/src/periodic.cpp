#include "stackcoh/periodic.hpp"

#include <functional>
#include <map>

namespace gcoh {

using zlin::AbelianGroup;
using zlin::CanonicalizedQuotient;
using zlin::Mat;

namespace {

// Compositions of `total` into `parts` nonnegative summands, lexicographic.
std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts);
    // iterative enumeration
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
    return out;
}

struct TotalComplex {
    std::vector<Int> factors;

    std::vector<std::vector<int>> slots(int degree) const {
        if (degree < 0) return {};
        return compositions(degree, static_cast<int>(factors.size()));
    }

    // slot-level differential C^d -> C^{d+1}; entry = sign * (factor or 0)
    Mat differential(int degree) const {
        auto src = slots(degree);
        auto dst = slots(degree + 1);
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
        Mat d(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            int sign_exp = 0;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                int level = src[j][i];
                // periodic cochain differential for one cyclic factor:
                // zero out of even levels, multiplication by the order out of
                // odd levels
                if (level % 2 == 1) {
                    std::vector<int> target = src[j];
                    ++target[i];
                    Int coef = factors[i];
                    if (sign_exp % 2 == 1) coef = -coef;
                    d(index.at(target), j) += coef;
                }
                sign_exp += src[j][i];
            }
        }
        return d;
    }
};

// Homology of presented-group complex at one spot: terms are
// slots x coeff-generators with block-diagonal coefficient relations.
struct PresentedLevel {
    Mat relations;  // ambient relation columns
    std::size_t dim;
};

Mat expand_blocks(const Mat& slot_mat, const AbelianGroup& coeff) {
    std::size_t a = coeff.gens();
    Mat m(slot_mat.rows() * a, slot_mat.cols() * a);
    for (std::size_t i = 0; i < slot_mat.rows(); ++i)
        for (std::size_t j = 0; j < slot_mat.cols(); ++j) {
            const Int& v = slot_mat(i, j);
            if (v == 0) continue;
            for (std::size_t g = 0; g < a; ++g) m(i * a + g, j * a + g) = v;
        }
    return m;
}

Mat coeff_relations(std::size_t cells, const AbelianGroup& coeff) {
    std::size_t a = coeff.gens();
    std::size_t k = coeff.invariant_factors.size();
    Mat rel(cells * a, cells * k);
    for (std::size_t c = 0; c < cells; ++c)
        for (std::size_t i = 0; i < k; ++i)
            rel(c * a + i, c * k + i) = coeff.invariant_factors[i];
    return rel;
}

}  // namespace

AbelianGroup periodic_cohomology_Z(const std::vector<Int>& factors, int r) {
    if (r < 0) return AbelianGroup::trivial();
    TotalComplex tc{factors};
    std::size_t n_r = tc.slots(r).size();
    if (n_r == 0) return AbelianGroup::trivial();
    Mat d_r = tc.differential(r);
    Mat d_prev = r >= 1 ? tc.differential(r - 1) : Mat(n_r, 0);
    Mat k = zlin::kernel(d_r);
    auto x = zlin::SmithSolver(k).solve(d_prev);
    if (!x) throw std::logic_error("periodic complex: image escapes kernel");
    return zlin::canonicalize_quotient(k.cols(), *x).group;
}

AbelianGroup periodic_cohomology(const std::vector<Int>& factors,
                                 const AbelianGroup& coeff, int r) {
    if (r < 0 || coeff.is_trivial()) return AbelianGroup::trivial();
    TotalComplex tc{factors};
    std::size_t n_r = tc.slots(r).size();
    if (n_r == 0) return AbelianGroup::trivial();
    std::size_t n_next = tc.slots(r + 1).size();

    Mat d_r = expand_blocks(tc.differential(r), coeff);
    Mat rel_next = coeff_relations(n_next, coeff);
    Mat k = zlin::preimage_lattice(d_r, rel_next);

    Mat d_prev = r >= 1 ? expand_blocks(tc.differential(r - 1), coeff)
                        : Mat(n_r * coeff.gens(), 0);
    Mat rel_here = coeff_relations(n_r, coeff);
    auto x = zlin::SmithSolver(k).solve(d_prev.hcat(rel_here));
    if (!x) throw std::logic_error("periodic complex: image escapes kernel");
    return zlin::canonicalize_quotient(k.cols(), *x).group;
}

GroupValue abelian_cohomology_Z(const std::vector<Int>& factors, int r) {
    return {zlin::GradedPiece::exact(periodic_cohomology_Z(factors, r)),
            Provenance::periodic_resolution};
}

namespace {

struct PeriodicClasses {
    AbelianGroup group;
    Mat kernel_basis;
    CanonicalizedQuotient quot;
    Mat reps;
};

PeriodicClasses periodic_classes_Z(const TotalComplex& tc, int r) {
    std::size_t n_r = tc.slots(r).size();
    PeriodicClasses pc;
    if (n_r == 0) {
        pc.group = AbelianGroup::trivial();
        pc.kernel_basis = Mat(0, 0);
        return pc;
    }
    Mat d_r = tc.differential(r);
    Mat d_prev = r >= 1 ? tc.differential(r - 1) : Mat(n_r, 0);
    pc.kernel_basis = zlin::kernel(d_r);
    auto x = zlin::SmithSolver(pc.kernel_basis).solve(d_prev);
    if (!x) throw std::logic_error("periodic complex: image escapes kernel");
    pc.quot = zlin::canonicalize_quotient(pc.kernel_basis.cols(), *x);
    pc.group = pc.quot.group;
    pc.reps = pc.kernel_basis * pc.quot.from_canonical;
    return pc;
}

}  // namespace

zlin::AbelianHom product_projection_pullback(const std::vector<Int>& a_factors,
                                             const std::vector<Int>& b_factors, int r) {
    TotalComplex ta{a_factors};
    std::vector<Int> all = a_factors;
    for (const Int& f : b_factors) all.push_back(f);
    TotalComplex tab{all};

    PeriodicClasses ca = periodic_classes_Z(ta, r);
    PeriodicClasses cab = periodic_classes_Z(tab, r);

    // Chain map: slot j over A goes to slot (j, 0,...,0). The first
    // differential of every periodic factor is zero, so nothing leaks out of
    // the trivial-B row and this is a cochain map.
    auto sa = ta.slots(r);
    auto sall = tab.slots(r);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < sall.size(); ++i) index[sall[i]] = i;
    Mat incl(sall.size(), sa.size());
    for (std::size_t j = 0; j < sa.size(); ++j) {
        std::vector<int> target = sa[j];
        target.resize(all.size(), 0);
        incl(index.at(target), j) = 1;
    }

    Mat images = incl * ca.reps;
    auto coords = zlin::SmithSolver(cab.kernel_basis).solve(images);
    if (!coords) throw std::logic_error("pullback image is not a cocycle");
    Mat m = cab.quot.reduce(cab.quot.to_canonical * *coords);
    return zlin::AbelianHom(ca.group, cab.group, m);
}

zlin::AbelianGroup product_quotient_term(const std::vector<Int>& a_factors, const Int& d, int r) {
    zlin::AbelianHom pull = product_projection_pullback(a_factors, {d}, r);
    return zlin::hom_analyze(pull).cokernel;
}

}  // namespace gcoh
