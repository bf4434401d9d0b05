#include "stackcoh/bar.hpp"

#include <algorithm>
#include <cstdlib>

#include "stackcoh/modring.hpp"
#include "stackcoh/periodic.hpp"

namespace gcoh {

using zlin::AbelianGroup;
using zlin::AbelianHom;
using zlin::GradedPiece;
using zlin::Mat;

BarBudget BarBudget::from_env() {
    BarBudget b;
    if (const char* s = std::getenv("STACKCOH_BAR_BUDGET")) b.max_oracle_cells = Int(s);
    if (const char* s = std::getenv("STACKCOH_EXPLICIT_BUDGET")) b.max_explicit_cells = Int(s);
    return b;
}

namespace {

// Normalized inhomogeneous cochains: bases are tuples of non-identity
// elements; values on tuples containing the identity are zero, which drops
// the merge faces that hit the identity.
struct NormalizedBar {
    const FiniteGroup::Table* t;
    std::vector<int> nonid;  // elements != identity
    int m;                   // |G| - 1

    explicit NormalizedBar(const FiniteGroup::Table& table) : t(&table) {
        for (int x = 0; x < table.n; ++x)
            if (x != table.identity) nonid.push_back(x);
        m = static_cast<int>(nonid.size());
    }

    std::size_t dim(int r) const {
        std::size_t d = 1;
        for (int i = 0; i < r; ++i) d *= static_cast<std::size_t>(m);
        return d;
    }

    void decode(std::size_t idx, int r, std::vector<int>& tuple) const {
        tuple.resize(r);
        for (int i = 0; i < r; ++i) {
            tuple[i] = nonid[idx % m];
            idx /= m;
        }
    }

    // position of a non-identity element in nonid, assuming contiguity after
    // the identity index
    int pos(int element) const {
        return element < t->identity ? element : element - 1;
    }

    std::size_t encode(const std::vector<int>& tuple) const {
        std::size_t idx = 0;
        for (std::size_t i = tuple.size(); i-- > 0;)
            idx = idx * m + static_cast<std::size_t>(pos(tuple[i]));
        return idx;
    }

    // Sparse row of d_r : C^r -> C^{r+1} at output tuple index `o`:
    // (df)(g_1..g_{r+1}) = f(g_2..) + sum (-1)^i f(..g_i g_{i+1}..) +
    // (-1)^{r+1} f(g_1..g_r); faces through the identity vanish.
    void differential_row(int r, std::size_t o,
                          std::vector<std::pair<std::size_t, int>>& out) const {
        out.clear();
        std::vector<int> w;
        decode(o, r + 1, w);
        std::vector<int> face(r);
        auto add = [&](std::size_t col, int coef) {
            for (auto& [c, v] : out)
                if (c == col) {
                    v += coef;
                    return;
                }
            out.emplace_back(col, coef);
        };
        // drop first
        for (int i = 0; i < r; ++i) face[i] = w[i + 1];
        add(encode(face), 1);
        // merges
        for (int j = 0; j < r; ++j) {
            int z = t->at(w[j], w[j + 1]);
            if (z == t->identity) continue;
            for (int i = 0; i < r; ++i) face[i] = i < j ? w[i] : (i == j ? z : w[i + 1]);
            add(encode(face), (j % 2 == 0) ? -1 : 1);  // (-1)^{j+1}
        }
        // drop last
        for (int i = 0; i < r; ++i) face[i] = w[i];
        add(encode(face), (r % 2 == 0) ? -1 : 1);  // (-1)^{r+1}
        std::erase_if(out, [](const auto& e) { return e.second == 0; });
    }

    Mat dense_differential(int r, std::size_t coeff_gens) const {
        std::size_t rows = dim(r + 1), cols = dim(r);
        Mat d(rows * coeff_gens, cols * coeff_gens);
        std::vector<std::pair<std::size_t, int>> row;
        for (std::size_t o = 0; o < rows; ++o) {
            differential_row(r, o, row);
            for (const auto& [c, v] : row)
                for (std::size_t g = 0; g < coeff_gens; ++g)
                    d(o * coeff_gens + g, c * coeff_gens + g) = v;
        }
        return d;
    }

    // Columns of d_r as sparse rows over the output index space (transpose
    // orientation, which is what the kernel engine consumes).
    std::vector<std::vector<std::pair<std::uint32_t, long>>> sparse_columns(int r) const {
        std::vector<std::vector<std::pair<std::uint32_t, long>>> cols(dim(r));
        std::vector<std::pair<std::size_t, int>> row;
        std::size_t rows = dim(r + 1);
        for (std::size_t o = 0; o < rows; ++o) {
            differential_row(r, o, row);
            for (const auto& [c, v] : row)
                cols[c].emplace_back(static_cast<std::uint32_t>(o), v);
        }
        return cols;
    }

};

std::vector<Int> prime_factors(Int n) {
    std::vector<Int> ps;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// H^r(G, Z) for r >= 1: torsion comes from the Smith divisors of d_{r-1}
// (the kernel of d_r is a pure sublattice, so relative divisors agree); the
// free rank needs rank(d_r), certified by the squeeze
//   rank_p(d_r) <= rank_Q(d_r) <= n_r - rank_Z(d_{r-1}),
// which collapses to equality whenever the two ends meet.
AbelianGroup bar_z(const NormalizedBar& B, const Int& order, int r) {
    std::size_t n_r = B.dim(r);
    Mat d_prev = r >= 1 ? B.dense_differential(r - 1, 1) : Mat(n_r, 0);
    std::vector<Int> div = zlin::smith_divisors(d_prev);
    std::size_t rank_prev = div.size();
    std::vector<Int> torsion;
    for (const Int& d : div)
        if (d > 1) torsion.push_back(d);

    // rank(d_r) is squeezed: rank_p <= rank_Q <= n_r - rank_Z(d_{r-1}), so
    // the row stream stops as soon as the mod-p rank reaches the upper bound.
    std::size_t target = n_r - rank_prev;
    std::size_t rank_r = 0;
    bool certified = false;
    int attempts = 0;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19}) {
        if (order % p == 0) continue;
        StreamRankModP rk(p, n_r);
        std::vector<std::pair<std::size_t, int>> row;
        std::vector<std::pair<std::uint32_t, long>> srow;
        std::size_t outputs = B.dim(r + 1);
        rank_r = 0;
        for (std::size_t o = 0; o < outputs && rank_r < target; ++o) {
            B.differential_row(r, o, row);
            if (row.empty()) continue;
            srow.clear();
            for (const auto& [c, v] : row) srow.emplace_back(static_cast<std::uint32_t>(c), v);
            rank_r = rk.add_row(srow);
        }
        certified = (rank_r == target);
        if (certified || ++attempts >= 3) break;
    }
    if (!certified) {
        // exact integer rank as a last resort
        zlin::ConstraintKernel ck(n_r);
        std::vector<std::pair<std::size_t, int>> row;
        std::vector<std::pair<std::size_t, Int>> irow;
        for (std::size_t o = 0; o < B.dim(r + 1); ++o) {
            B.differential_row(r, o, row);
            irow.clear();
            for (auto& [c, v] : row) irow.emplace_back(c, Int(v));
            ck.add(irow, 0);
        }
        rank_r = n_r - ck.basis().cols();
    }
    AbelianGroup h;
    h.free_rank = n_r - rank_r - rank_prev;
    h.invariant_factors = torsion;
    return h;
}

// H^r(G, Z/c) (r >= 1): CRT over prime powers q = p^e; the Z/q-module
// structure of ker/im is read off Howell span sizes of p^j K + L.
AbelianGroup bar_cyclic_coeff(const NormalizedBar& B, const Int& c, int r) {
    std::size_t n_r = B.dim(r);
    auto cols = B.sparse_columns(r);

    AbelianGroup out;
    for (const Int& p : prime_factors(c)) {
        Int q = 1;
        int e = 0;
        Int cc = c;
        while (cc % p == 0) {
            cc /= p;
            q *= p;
            ++e;
        }
        if (q >= Int(1) << 31)
            throw std::invalid_argument("coefficient modulus too large for the oracle");
        std::uint64_t qu = static_cast<std::uint64_t>(q);
        std::uint64_t pu = static_cast<std::uint64_t>(p);

        // kernel of d_r mod q
        std::vector<ModRow> rows;
        rows.reserve(n_r);
        for (const auto& col : cols) {
            ModRow m;
            for (const auto& [i, v] : col) {
                long red = v % static_cast<long>(qu);
                if (red < 0) red += static_cast<long>(qu);
                if (red) m.emplace_back(i, static_cast<std::uint64_t>(red));
            }
            rows.push_back(std::move(m));
        }
        auto kern = howell_process(qu, pu, e, std::move(rows), true).kernel;

        // image generators: columns of d_{r-1} mod q
        std::vector<ModRow> lgens;
        if (r >= 1) {
            std::vector<std::pair<std::size_t, int>> row;
            std::vector<ModRow> prev_cols(B.dim(r - 1));
            for (std::size_t o = 0; o < n_r; ++o) {
                B.differential_row(r - 1, o, row);
                for (const auto& [cidx, v] : row) {
                    long red = v % static_cast<long>(qu);
                    if (red < 0) red += static_cast<long>(qu);
                    if (red)
                        prev_cols[cidx].emplace_back(static_cast<std::uint32_t>(o),
                                                     static_cast<std::uint64_t>(red));
                }
            }
            lgens = std::move(prev_cols);
        }

        // log_p |p^j K + L| for j = 0..e
        std::vector<long> logs(e + 1);
        for (int j = 0; j <= e; ++j) {
            std::uint64_t shift = 1;
            for (int i = 0; i < j; ++i) shift *= pu;
            std::vector<ModRow> gens;
            for (const auto& k : kern) {
                ModRow s;
                for (const auto& [i, v] : k) {
                    std::uint64_t w = (v * shift) % qu;
                    if (w) s.emplace_back(i, w);
                }
                if (!s.empty()) gens.push_back(std::move(s));
            }
            for (const auto& l : lgens)
                if (!l.empty()) gens.push_back(l);
            logs[j] = howell_process(qu, pu, e, std::move(gens), false).log_size;
        }
        // delta_j = dim_Fp p^j M / p^{j+1} M; pieces Z/p^t appear
        // (delta_{t-1} - delta_t) times
        std::vector<long> delta(e);
        for (int j = 0; j < e; ++j) delta[j] = logs[j] - logs[j + 1];
        for (int t = 1; t <= e; ++t) {
            long count = delta[t - 1] - (t < e ? delta[t] : 0);
            for (long i = 0; i < count; ++i)
                out = zlin::direct_sum(out, AbelianGroup::cyclic(zlin::pow_int(p, t)));
        }
    }
    return out;
}

void check_oracle_budget(const FiniteGroup& g, int r, const BarBudget& b) {
    Int cells = zlin::pow_int(g.order(), static_cast<unsigned>(r));
    if (cells > b.max_oracle_cells)
        throw BudgetExceeded("bar_cohomology", cells, b.max_oracle_cells);
}

void check_explicit_budget(const FiniteGroup& g, int r, const BarBudget& b) {
    Int cells = zlin::pow_int(g.order() - 1, static_cast<unsigned>(r + 1));
    if (cells > b.max_explicit_cells)
        throw BudgetExceeded("bar_classes", cells, b.max_explicit_cells);
}

}  // namespace

GroupValue bar_cohomology(const FiniteGroup& g, const AbelianGroup& coeff, int r,
                          const BarBudget& budget) {
    if (r < 0) throw std::invalid_argument("negative degree");
    if (r == 0) return {GradedPiece::exact(coeff), Provenance::bar_oracle};
    check_oracle_budget(g, r, budget);

    NormalizedBar B(g.table());
    AbelianGroup result;
    if (coeff.free_rank > 0) {
        AbelianGroup hz = bar_z(B, g.order(), r);
        result = zlin::direct_power(hz, coeff.free_rank);
    }
    for (const Int& c : coeff.invariant_factors)
        result = zlin::direct_sum(result, bar_cyclic_coeff(B, c, r));
    return {GradedPiece::exact(result), Provenance::bar_oracle};
}

zlin::Mat CocycleSpace::classes_of(const Mat& cocycles) const {
    auto x = solver->solve(cocycles);
    if (!x) throw std::logic_error("classes_of: input is not a cocycle");
    return quot.reduce(quot.to_canonical * *x);
}

CocycleSpace bar_classes(const FiniteGroup& g, const AbelianGroup& coeff, int r,
                         const BarBudget& budget) {
    if (r < 0) throw std::invalid_argument("negative degree");
    check_explicit_budget(g, r, budget);
    NormalizedBar B(g.table());
    const std::size_t a = coeff.gens();
    const std::size_t n_r = B.dim(r);
    const std::size_t ambient = n_r * a;

    // kernel of d_r with coefficient relations as per-row moduli
    zlin::ConstraintKernel ck(ambient);
    {
        std::vector<std::pair<std::size_t, int>> row;
        zlin::ConstraintKernel::SparseRow irow;
        for (std::size_t o = 0; o < B.dim(r + 1); ++o) {
            B.differential_row(r, o, row);
            if (row.empty()) continue;
            for (std::size_t gi = 0; gi < a; ++gi) {
                irow.clear();
                for (const auto& [c, v] : row) irow.emplace_back(c * a + gi, Int(v));
                ck.add(irow, coeff.gen_order(gi));
            }
        }
    }

    CocycleSpace s;
    s.degree = r;
    s.kernel_basis = ck.basis();

    // relations: image of d_{r-1} plus coefficient torsion in every cell
    Mat d_prev = r >= 1 ? B.dense_differential(r - 1, a) : Mat(ambient, 0);
    std::size_t k = coeff.invariant_factors.size();
    Mat tors(ambient, n_r * k);
    for (std::size_t cell = 0; cell < n_r; ++cell)
        for (std::size_t i = 0; i < k; ++i)
            tors(cell * a + i, cell * k + i) = coeff.invariant_factors[i];

    s.solver = std::make_shared<zlin::SmithSolver>(s.kernel_basis);
    auto x = s.solver->solve(d_prev.hcat(tors));
    if (!x) throw std::logic_error("bar_classes: relations escape the cocycle lattice");
    s.quot = zlin::canonicalize_quotient(s.kernel_basis.cols(), *x);
    s.group = s.quot.group;
    s.reps = s.kernel_basis * s.quot.from_canonical;
    return s;
}

Mat bar_differential_dense(const FiniteGroup& g, std::size_t coeff_gens, int r) {
    NormalizedBar B(g.table());
    return B.dense_differential(r, coeff_gens);
}

Mat restriction_cochain_matrix(const FiniteGroup& g, const Subgroup& h, int r) {
    NormalizedBar BG(g.table());
    NormalizedBar BH(h.group.table());
    Mat m(BH.dim(r), BG.dim(r));
    std::vector<int> tuple(r), parent(r);
    for (std::size_t o = 0; o < BH.dim(r); ++o) {
        BH.decode(o, r, tuple);
        for (int i = 0; i < r; ++i) parent[i] = h.elements[tuple[i]];
        m(o, BG.encode(parent)) = 1;
    }
    return m;
}

Mat transfer_cochain_matrix(const FiniteGroup& g, const Subgroup& h, int r) {
    const FiniteGroup::Table& t = g.table();
    NormalizedBar BG(t);
    NormalizedBar BH(h.group.table());

    // left transversal: minimal representative of each coset gH
    std::vector<int> rep_of(t.n, -1);
    std::vector<int> transversal;
    for (int x = 0; x < t.n; ++x) {
        if (rep_of[x] >= 0) continue;
        int rep = x;  // first unseen element has minimal index in its coset
        transversal.push_back(rep);
        for (int e : h.elements) rep_of[t.at(rep, e)] = rep;
    }

    // h-part of g relative to a representative: rep(g t)^{-1} g t in H
    auto h_part = [&](int gx, int tx) {
        int gt = t.at(gx, tx);
        return t.at(t.inverse[rep_of[gt]], gt);
    };

    Mat m(BG.dim(r), BH.dim(r));
    std::vector<int> w(r), args(r);
    for (std::size_t o = 0; o < BG.dim(r); ++o) {
        BG.decode(o, r, w);
        for (int tx : transversal) {
            int cur = tx;
            bool degenerate = false;
            for (int j = r - 1; j >= 0; --j) {
                int arg = h_part(w[j], cur);
                if (arg == t.identity) {
                    degenerate = true;
                    break;
                }
                args[j] = h.position[arg];  // subgroup element index
                cur = rep_of[t.at(w[j], cur)];
            }
            if (degenerate) continue;
            m(o, BH.encode(args)) += 1;
        }
    }
    return m;
}

namespace {

AbelianGroup z_coefficients() { return AbelianGroup::free(1); }

HomValue transfer_fallback(const FiniteGroup& g, const std::vector<int>& gens, int r,
                           const Int& cells) {
    // cyclic-in-cyclic: subgroup of Z/n generated by residues
    if (g.kind() == FiniteGroup::Kind::cyclic) {
        Int n = g.order();
        Int d = n;
        for (int x : gens) d = zlin::gcd(d, Int(x));
        Int sub_order = n / d;  // subgroup <d> has order n/d
        Int index = d;
        AbelianGroup hr_sub, hr_g;
        Mat m;
        if (r == 0) {
            hr_sub = AbelianGroup::free(1);
            hr_g = AbelianGroup::free(1);
            m = Mat(1, 1);
            m(0, 0) = index;
        } else if (r % 2 == 1) {
            hr_sub = AbelianGroup::trivial();
            hr_g = AbelianGroup::trivial();
            m = Mat(0, 0);
        } else {
            hr_sub = AbelianGroup::cyclic(sub_order);
            hr_g = AbelianGroup::cyclic(n);
            m = Mat(hr_g.gens(), hr_sub.gens());
            if (sub_order > 1 && n > 1) m(0, 0) = index;  // a -> [G:H] * lift(a)
        }
        return {AbelianHom(hr_sub, hr_g, m), Provenance::fallback_law};
    }
    if (g.kind() == FiniteGroup::Kind::abelian) {
        // factor-in-product: generators must span exactly a sub-product of
        // the canonical factors
        const std::vector<Int>& f = g.invariant_factors();
        std::vector<std::vector<int>> digits;
        for (int x : gens) {
            std::vector<int> d(f.size());
            Int v = x;
            for (std::size_t i = 0; i < f.size(); ++i) {
                d[i] = static_cast<int>(v % f[i]);
                v /= f[i];
            }
            digits.push_back(d);
        }
        std::vector<bool> support(f.size(), false);
        for (const auto& d : digits)
            for (std::size_t i = 0; i < f.size(); ++i)
                if (d[i] != 0) support[i] = true;
        // subgroup order generated by the digit vectors
        Mat gen_mat(f.size(), digits.size());
        for (std::size_t j = 0; j < digits.size(); ++j)
            for (std::size_t i = 0; i < f.size(); ++i) gen_mat(i, j) = digits[j][i];
        Mat rel(f.size(), f.size());
        for (std::size_t i = 0; i < f.size(); ++i) rel(i, i) = f[i];
        Int total = 1;
        for (const Int& x : f) total *= x;
        Int coker = zlin::canonicalize_quotient(f.size(), gen_mat.hcat(rel)).group.order();
        Int sub_order = total / coker;
        Int expected = 1;
        std::vector<Int> sub_factors, comp_factors;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (support[i]) {
                expected *= f[i];
                sub_factors.push_back(f[i]);
            } else {
                comp_factors.push_back(f[i]);
            }
        }
        if (sub_order != expected)
            throw BudgetExceeded("transfer_map (no structural fallback applies)", cells, cells);
        Int index = total / sub_order;
        AbelianHom pull = product_projection_pullback(sub_factors, comp_factors, r);
        Mat m = pull.matrix().scaled(index);
        return {AbelianHom(pull.domain(), pull.codomain(), m), Provenance::fallback_law};
    }
    throw BudgetExceeded("transfer_map (no structural fallback applies)", cells, cells);
}

}  // namespace

HomValue restriction_map(const FiniteGroup& g, const Subgroup& h, int r, const BarBudget& budget) {
    CocycleSpace sg = bar_classes(g, z_coefficients(), r, budget);
    CocycleSpace sh = bar_classes(h.group, z_coefficients(), r, budget);
    Mat res = restriction_cochain_matrix(g, h, r);
    Mat mat = sh.classes_of(res * sg.reps);
    return {AbelianHom(sg.group, sh.group, mat), Provenance::bar_oracle};
}

HomValue restriction_map(const FiniteGroup& g, const std::vector<int>& subgroup_generators,
                         int r, const BarBudget& budget) {
    return restriction_map(g, subgroup_closure(g, subgroup_generators), r, budget);
}

HomValue transfer_map(const FiniteGroup& g, const Subgroup& h, int r, const BarBudget& budget) {
    CocycleSpace sg = bar_classes(g, z_coefficients(), r, budget);
    CocycleSpace sh = bar_classes(h.group, z_coefficients(), r, budget);
    Mat cor = transfer_cochain_matrix(g, h, r);
    Mat mat = sg.classes_of(cor * sh.reps);
    return {AbelianHom(sh.group, sg.group, mat), Provenance::bar_oracle};
}

HomValue transfer_map(const FiniteGroup& g, const std::vector<int>& subgroup_generators,
                      int r, const BarBudget& budget) {
    Int cells = zlin::pow_int(g.order() - 1, static_cast<unsigned>(r + 1));
    if (cells > budget.max_explicit_cells || !g.has_materialized_table())
        return transfer_fallback(g, subgroup_generators, r, cells);
    return transfer_map(g, subgroup_closure(g, subgroup_generators), r, budget);
}

}  // namespace gcoh
