#include "stackcoh/abelian.hpp"

#include <sstream>

namespace zlin {

Int AbelianGroup::order() const {
    if (!is_finite()) throw std::logic_error("order of infinite group");
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
}

Mat AbelianGroup::presentation() const {
    Mat r(gens(), invariant_factors.size());
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) r(i, i) = invariant_factors[i];
    return r;
}

AbelianGroup AbelianGroup::cyclic(const Int& d) {
    if (d == 0) return free(1);
    if (d == 1 || d == -1) return trivial();
    return {0, {abs(d)}};
}

std::string to_string(const AbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank > 0) {
        os << "Z^" << g.free_rank;
        first = false;
    }
    for (const Int& d : g.invariant_factors) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

Mat CanonicalizedQuotient::reduce(const Mat& coords) const {
    Mat r = coords;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        Int o = group.gen_order(i);
        if (o == 0) continue;
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = mod_floor(r(i, j), o);
    }
    return r;
}

CanonicalizedQuotient canonicalize_quotient(std::size_t n, const Mat& relation_columns) {
    if (relation_columns.cols() > 0 && relation_columns.rows() != n)
        throw DimensionMismatch("relation columns must live in Z^generators");
    Mat rel = relation_columns;
    if (rel.cols() == 0) rel = Mat(n, 0);
    SmithForm f = smith_normal_form(rel);

    CanonicalizedQuotient q;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < f.rank; ++i) {
        if (f.d(i, i) >= 2) {
            q.group.invariant_factors.push_back(f.d(i, i));
            kept.push_back(i);
        }
    }
    for (std::size_t i = f.rank; i < n; ++i) kept.push_back(i);
    q.group.free_rank = n - f.rank;

    q.to_canonical = f.u.rows_subset(kept);
    q.from_canonical = f.u_inv.columns(kept);
    return q;
}

AbelianGroup group_from_presentation(std::size_t generators, const Mat& relations) {
    if (relations.rows() > 0 && relations.cols() != generators)
        throw DimensionMismatch("relations must have one column per generator");
    return canonicalize_quotient(generators, relations.transpose()).group;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    Mat rel = a.presentation().dsum(b.presentation());
    CanonicalizedQuotient q = canonicalize_quotient(a.gens() + b.gens(), rel);
    return q.group;
}

DirectSumData direct_sum_data(const AbelianGroup& a, const AbelianGroup& b) {
    Mat rel = a.presentation().dsum(b.presentation());
    CanonicalizedQuotient q = canonicalize_quotient(a.gens() + b.gens(), rel);
    DirectSumData d;
    d.sum = q.group;
    std::vector<std::size_t> ia(a.gens()), ib(b.gens());
    for (std::size_t i = 0; i < a.gens(); ++i) ia[i] = i;
    for (std::size_t i = 0; i < b.gens(); ++i) ib[i] = a.gens() + i;
    d.embed_a = q.reduce(q.to_canonical.columns(ia));
    d.embed_b = q.reduce(q.to_canonical.columns(ib));
    // sections reduced modulo the summand orders
    Mat pa = q.from_canonical.rows_subset(ia);
    Mat pb = q.from_canonical.rows_subset(ib);
    for (std::size_t i = 0; i < a.gens(); ++i) {
        Int o = a.gen_order(i);
        if (o == 0) continue;
        for (std::size_t j = 0; j < pa.cols(); ++j) pa(i, j) = mod_floor(pa(i, j), o);
    }
    for (std::size_t i = 0; i < b.gens(); ++i) {
        Int o = b.gen_order(i);
        if (o == 0) continue;
        for (std::size_t j = 0; j < pb.cols(); ++j) pb(i, j) = mod_floor(pb(i, j), o);
    }
    d.project_a = pa;
    d.project_b = pb;
    return d;
}

AbelianGroup direct_power(const AbelianGroup& a, std::size_t n) {
    AbelianGroup r;
    for (std::size_t i = 0; i < n; ++i) r = direct_sum(r, a);
    return r;
}

AbelianGroup torsion_subgroup(const AbelianGroup& a, const Int& d) {
    // x with d x = 0: each Z/c contributes Z/gcd(c, d); free part none.
    std::vector<Int> fac;
    for (const Int& c : a.invariant_factors) {
        Int g = gcd(c, d);
        if (g >= 2) fac.push_back(g);
    }
    return {0, fac};
}

AbelianGroup quotient_by(const AbelianGroup& a, const Int& d) {
    std::vector<Int> fac;
    Int ad = abs(d);
    if (ad == 0) return a;
    for (const Int& c : a.invariant_factors) {
        Int g = gcd(c, ad);
        if (g >= 2) fac.push_back(g);
    }
    for (std::size_t i = 0; i < a.free_rank; ++i)
        if (ad >= 2) fac.push_back(ad);
    // gcds of a divisor chain already form a chain
    return {0, fac};
}

}  // namespace zlin
