#include "stackcoh/hom.hpp"

#include <sstream>

namespace zlin {

namespace {

Mat reduce_mod_codomain(const AbelianGroup& cod, Mat m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int o = cod.gen_order(i);
        if (o == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(m(i, j), o);
    }
    return m;
}

}  // namespace

AbelianHom::AbelianHom(AbelianGroup domain, AbelianGroup codomain, Mat matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.gens() || matrix_.cols() != domain_.gens())
        throw DimensionMismatch("hom matrix shape does not match generator counts");
    // d_j * f(e_j) must vanish in the codomain for every torsion generator.
    for (std::size_t j = 0; j < domain_.gens(); ++j) {
        Int oj = domain_.gen_order(j);
        if (oj == 0) continue;
        for (std::size_t i = 0; i < codomain_.gens(); ++i) {
            Int v = oj * matrix_(i, j);
            Int oi = codomain_.gen_order(i);
            bool ok = (oi == 0) ? (v == 0) : (v % oi == 0);
            if (!ok) throw IllDefinedHom("matrix does not map relations into relations");
        }
    }
    matrix_ = reduce_mod_codomain(codomain_, matrix_);
}

AbelianHom AbelianHom::zero(const AbelianGroup& dom, const AbelianGroup& cod) {
    return AbelianHom(dom, cod, Mat(cod.gens(), dom.gens()));
}

AbelianHom AbelianHom::identity(const AbelianGroup& g) {
    return AbelianHom(g, g, Mat::identity(g.gens()));
}

AbelianHom AbelianHom::multiplication_by(const Int& n, const AbelianGroup& g) {
    Mat m = Mat::identity(g.gens()).scaled(n);
    return AbelianHom(g, g, m);
}

bool AbelianHom::equal_to(const AbelianHom& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ &&
           reduce_mod_codomain(codomain_, matrix_) == reduce_mod_codomain(o.codomain_, o.matrix_);
}

AbelianHom AbelianHom::direct_sum(const AbelianHom& o) const {
    // canonicalization may mix block generators, so conjugate the block
    // matrix through the embedding/projection data
    DirectSumData dom = direct_sum_data(domain_, o.domain_);
    DirectSumData cod = direct_sum_data(codomain_, o.codomain_);
    Mat m = cod.embed_a * matrix_ * dom.project_a;
    Mat m2 = cod.embed_b * o.matrix_ * dom.project_b;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += m2(i, j);
    return AbelianHom(dom.sum, cod.sum, m);
}

AbelianHom compose(const AbelianHom& h, const AbelianHom& g) {
    if (!(g.codomain() == h.domain())) throw DimensionMismatch("compose: middle groups differ");
    return AbelianHom(g.domain(), h.codomain(), h.matrix() * g.matrix());
}

HomAnalysis hom_analyze(const AbelianHom& f) {
    const AbelianGroup& A = f.domain();
    const AbelianGroup& B = f.codomain();
    Mat rel_a = A.presentation();
    Mat rel_b = B.presentation();

    HomAnalysis out;

    // Cokernel: codomain modulo relations and the image columns.
    out.coker_quot = canonicalize_quotient(B.gens(), f.matrix().hcat(rel_b));
    out.cokernel = out.coker_quot.group;

    // Kernel: the preimage lattice of the codomain relations, modulo the
    // domain relations expressed in that lattice.
    out.kernel_lattice = preimage_lattice(f.matrix(), rel_b);
    SmithSolver ks(out.kernel_lattice);
    auto rel_in_k = ks.solve(rel_a);
    if (!rel_in_k)
        throw std::logic_error("domain relations escape the kernel lattice; hom ill-defined");
    out.kernel_quot = canonicalize_quotient(out.kernel_lattice.cols(), *rel_in_k);
    out.kernel = out.kernel_quot.group;

    // Image: domain modulo the kernel lattice.
    out.image = canonicalize_quotient(A.gens(), out.kernel_lattice).group;
    return out;
}

bool exact_at(const AbelianHom& incoming, const AbelianHom& outgoing) {
    if (!(incoming.codomain() == outgoing.domain()))
        throw DimensionMismatch("exact_at: joint mismatch");
    const AbelianGroup& Q = incoming.codomain();
    // Composite must vanish.
    AbelianHom comp = compose(outgoing, incoming);
    if (!comp.is_zero()) return false;
    // Homology at the joint: kernel lattice of outgoing modulo image + relations.
    Mat k = preimage_lattice(outgoing.matrix(), outgoing.codomain().presentation());
    Mat gens = incoming.matrix().hcat(Q.presentation());
    auto x = SmithSolver(k).solve(gens);
    if (!x) throw std::logic_error("image escapes kernel despite zero composite");
    return canonicalize_quotient(k.cols(), *x).group.is_trivial();
}

SixTermSequence kernel_cokernel_sequence(const AbelianHom& g, const AbelianHom& h) {
    if (!(g.codomain() == h.domain()))
        throw DimensionMismatch("kernel_cokernel_sequence: maps are not composable");

    SixTermSequence s;
    s.g = g;
    s.h = h;
    s.composite = compose(h, g);

    HomAnalysis ag = hom_analyze(g);
    HomAnalysis agh = hom_analyze(s.composite);
    HomAnalysis ah = hom_analyze(h);

    s.groups = {ag.kernel, agh.kernel, ah.kernel, ag.cokernel, agh.cokernel, ah.cokernel};

    // ker g -> ker hg: inclusion of lattices in the domain of g.
    {
        auto m = SmithSolver(agh.kernel_lattice).solve(ag.kernel_lattice);
        if (!m) throw std::logic_error("ker g is not inside ker hg");
        Mat mat = agh.kernel_quot.reduce(agh.kernel_quot.to_canonical * *m * ag.kernel_quot.from_canonical);
        s.maps[0] = AbelianHom(ag.kernel, agh.kernel, mat);
    }
    // ker hg -> ker h: apply g.
    {
        Mat img = g.matrix() * agh.kernel_lattice;
        auto m = SmithSolver(ah.kernel_lattice).solve(img);
        if (!m) throw std::logic_error("g(ker hg) is not inside ker h");
        Mat mat = ah.kernel_quot.reduce(ah.kernel_quot.to_canonical * *m * agh.kernel_quot.from_canonical);
        s.maps[1] = AbelianHom(agh.kernel, ah.kernel, mat);
    }
    // ker h -> coker g: ambient inclusion followed by projection.
    {
        Mat mat = ag.coker_quot.classify(ah.kernel_lattice * ah.kernel_quot.from_canonical);
        s.maps[2] = AbelianHom(ah.kernel, ag.cokernel, mat);
    }
    // coker g -> coker hg: apply h to lifted representatives.
    {
        Mat mat = agh.coker_quot.classify(h.matrix() * ag.coker_quot.from_canonical);
        s.maps[3] = AbelianHom(ag.cokernel, agh.cokernel, mat);
    }
    // coker hg -> coker h: identity on representatives.
    {
        Mat mat = ah.coker_quot.classify(agh.coker_quot.from_canonical);
        s.maps[4] = AbelianHom(agh.cokernel, ah.cokernel, mat);
    }

    s.exact = true;
    auto joint = [&](const char* name, bool ok) {
        std::ostringstream os;
        os << name << ": " << (ok ? "exact" : "NOT exact");
        s.audit.push_back(os.str());
        s.exact = s.exact && ok;
    };
    joint("0 -> ker g", hom_analyze(s.maps[0]).kernel.is_trivial());
    joint("ker(hg)", exact_at(s.maps[0], s.maps[1]));
    joint("ker h", exact_at(s.maps[1], s.maps[2]));
    joint("coker g", exact_at(s.maps[2], s.maps[3]));
    joint("coker(hg)", exact_at(s.maps[3], s.maps[4]));
    joint("coker h -> 0", hom_analyze(s.maps[4]).cokernel.is_trivial());
    return s;
}

}  // namespace zlin
