#include "stackcoh/phi2.hpp"

namespace gcoh {

using zlin::AbelianGroup;
using zlin::CanonicalizedQuotient;
using zlin::Mat;

void CochainComplexSpec::validate() const {
    if (differentials.size() + 1 != terms.size() && !(terms.size() <= 1 && differentials.empty()))
        throw std::invalid_argument("complex needs one differential between consecutive terms");
    for (std::size_t i = 0; i < differentials.size(); ++i) {
        if (!(differentials[i].domain() == terms[i]) ||
            !(differentials[i].codomain() == terms[i + 1]))
            throw std::invalid_argument("differential endpoints do not match the terms");
        if (i + 1 < differentials.size() &&
            !compose(differentials[i + 1], differentials[i]).is_zero())
            throw std::invalid_argument("consecutive differentials do not compose to zero");
    }
}

namespace {

// H^q of the complex with explicit cocycle representatives inside J^q.
struct TermHomology {
    Mat cocycles;  // ambient basis of the cocycle lattice
    CanonicalizedQuotient quot;
    std::shared_ptr<zlin::SmithSolver> solver;
    AbelianGroup group;
    Mat lift;  // ambient representatives of the canonical generators

    Mat classes_of(const Mat& ambient) const {
        auto x = solver->solve(ambient);
        if (!x) throw std::logic_error("vector is not a cocycle of the complex");
        return quot.reduce(quot.to_canonical * *x);
    }
};

TermHomology term_homology(const CochainComplexSpec& j, int q) {
    const AbelianGroup& term = j.terms[q];
    std::size_t n = term.gens();
    Mat out = static_cast<std::size_t>(q) < j.differentials.size() ? j.differentials[q].matrix()
                                                                   : Mat(0, n);
    Mat out_rel = static_cast<std::size_t>(q) < j.differentials.size()
                      ? j.terms[q + 1].presentation()
                      : Mat(0, 0);
    TermHomology th;
    th.cocycles = zlin::preimage_lattice(out, out_rel);
    Mat in = q >= 1 ? j.differentials[q - 1].matrix() : Mat(n, 0);
    th.solver = std::make_shared<zlin::SmithSolver>(th.cocycles);
    auto x = th.solver->solve(in.hcat(term.presentation()));
    if (!x) throw std::logic_error("boundaries escape the cocycle lattice");
    th.quot = zlin::canonicalize_quotient(th.cocycles.cols(), *x);
    th.group = th.quot.group;
    th.lift = th.cocycles * th.quot.from_canonical;
    return th;
}

// block-diagonal application of `per_cell` (rows_out x rows_in) to a stacked
// vector of `cells` blocks
Mat apply_per_cell(const Mat& per_cell, const Mat& stacked, std::size_t cells) {
    Mat out(cells * per_cell.rows(), stacked.cols());
    for (std::size_t c = 0; c < cells; ++c)
        for (std::size_t i = 0; i < per_cell.rows(); ++i)
            for (std::size_t k = 0; k < stacked.cols(); ++k) {
                zlin::Int acc = 0;
                for (std::size_t jj = 0; jj < per_cell.cols(); ++jj) {
                    const zlin::Int& v = per_cell(i, jj);
                    if (v != 0) acc += v * stacked(c * per_cell.cols() + jj, k);
                }
                out(c * per_cell.rows() + i, k) = acc;
            }
    return out;
}

}  // namespace

Phi2Report phi2_vanishing_check(const FiniteGroup& g, const CochainComplexSpec& j, int p, int q,
                                const BarBudget& budget) {
    j.validate();
    if (q < 1 || static_cast<std::size_t>(q) >= j.terms.size())
        throw std::invalid_argument("need 1 <= q < number of terms");
    if (p < 0) throw std::invalid_argument("negative degree");

    TermHomology hq = term_homology(j, q);
    TermHomology hq1 = term_homology(j, q - 1);

    CocycleSpace src = bar_classes(g, hq.group, p, budget);
    CocycleSpace tgt = bar_classes(g, hq1.group, p + 2, budget);

    std::size_t n_q = j.terms[q].gens();
    std::size_t n_q1 = j.terms[q - 1].gens();
    std::size_t cells_p = 1, cells_p1 = 1, cells_p2 = 1;
    {
        std::size_t m = static_cast<std::size_t>(g.order()) - 1;
        for (int i = 0; i < p; ++i) cells_p *= m;
        cells_p1 = cells_p * m;
        cells_p2 = cells_p1 * m;
    }

    Phi2Report rep;
    rep.source = src.group;
    rep.target = tgt.group;
    rep.matrix = Mat(tgt.group.gens(), src.group.gens());

    if (src.group.gens() == 0 || hq1.group.gens() == 0) {
        // nothing to map, or the target coefficient group is trivial
        rep.is_zero = true;
        if (src.group.gens() > 0) rep.matrix = Mat(tgt.group.gens(), src.group.gens());
        return rep;
    }

    // lift the canonical-generator cocycles G^p -> H^q(J) into J^q
    Mat lifted = apply_per_cell(hq.lift, src.reps, cells_p);

    // d_G on J^q-valued cochains
    Mat dg_p = bar_differential_dense(g, n_q, p);
    Mat boundary = dg_p * lifted;  // valued in im(d^{q-1}), cells_p1 blocks

    // divide by the complex differential: d^{q-1} nu = boundary, cellwise
    const Mat& dq1 = j.differentials[q - 1].matrix();
    Mat solve_block = dq1.hcat(j.terms[q].presentation());
    zlin::SmithSolver bsolver(solve_block);
    Mat nu(cells_p1 * n_q1, src.group.gens());
    for (std::size_t c = 0; c < cells_p1; ++c) {
        Mat rhs(n_q, src.group.gens());
        for (std::size_t i = 0; i < n_q; ++i)
            for (std::size_t k = 0; k < src.group.gens(); ++k)
                rhs(i, k) = boundary(c * n_q + i, k);
        auto sol = bsolver.solve(rhs);
        if (!sol) throw std::logic_error("group boundary is not divisible by the complex differential");
        for (std::size_t i = 0; i < n_q1; ++i)
            for (std::size_t k = 0; k < src.group.gens(); ++k)
                nu(c * n_q1 + i, k) = (*sol)(i, k);
    }

    // d_G nu, then project each cell to H^{q-1}(J)
    Mat dg_p1 = bar_differential_dense(g, n_q1, p + 1);
    Mat top = dg_p1 * nu;  // cells_p2 blocks valued in Z^{q-1}(J)
    Mat projected(cells_p2 * hq1.group.gens(), src.group.gens());
    for (std::size_t c = 0; c < cells_p2; ++c) {
        Mat block(n_q1, src.group.gens());
        for (std::size_t i = 0; i < n_q1; ++i)
            for (std::size_t k = 0; k < src.group.gens(); ++k)
                block(i, k) = top(c * n_q1 + i, k);
        Mat cls = hq1.classes_of(block);
        for (std::size_t i = 0; i < hq1.group.gens(); ++i)
            for (std::size_t k = 0; k < src.group.gens(); ++k)
                projected(c * hq1.group.gens() + i, k) = cls(i, k);
    }

    // the projected cochain is a (p+2)-cocycle; take its class
    rep.matrix = tgt.classes_of(projected);
    rep.is_zero = rep.matrix.is_zero();
    return rep;
}

}  // namespace gcoh
