#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stackcoh/extension.hpp"
#include "stackcoh/hom.hpp"

using namespace zlin;

namespace {

Mat from_rows(std::vector<std::vector<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
}

Mat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

void check_smith_certificates(const Mat& m) {
    SmithForm f = smith_normal_form(m);
    CHECK(f.u * m * f.v == f.d);
    if (m.rows() > 0) CHECK(abs(det_sign_free(f.u)) == 1);
    if (m.cols() > 0) CHECK(abs(det_sign_free(f.v)) == 1);
    CHECK(f.u * f.u_inv == Mat::identity(m.rows()));
    CHECK(f.v * f.v_inv == Mat::identity(m.cols()));
    for (std::size_t i = 0; i + 1 < f.divisors.size(); ++i) {
        CHECK(f.divisors[i] > 0);
        CHECK(f.divisors[i + 1] % f.divisors[i] == 0);
    }
    // off-diagonal zero, diagonal nonnegative
    for (std::size_t i = 0; i < f.d.rows(); ++i)
        for (std::size_t j = 0; j < f.d.cols(); ++j) {
            if (i != j) CHECK(f.d(i, j) == 0);
            else CHECK(f.d(i, j) >= 0);
        }
}

// Random hom between canonical groups, well-defined by construction.
AbelianHom random_hom(std::mt19937& rng, const AbelianGroup& a, const AbelianGroup& b) {
    std::uniform_int_distribution<int> d(-6, 6);
    Mat m(b.gens(), a.gens());
    for (std::size_t j = 0; j < a.gens(); ++j) {
        Int oj = a.gen_order(j);
        for (std::size_t i = 0; i < b.gens(); ++i) {
            Int oi = b.gen_order(i);
            if (oj == 0) {
                m(i, j) = d(rng);
            } else if (oi == 0) {
                m(i, j) = 0;
            } else {
                m(i, j) = (oi / gcd(oi, oj)) * d(rng);
            }
        }
    }
    return AbelianHom(a, b, m);
}

AbelianGroup random_group(std::mt19937& rng, bool allow_free = true) {
    std::uniform_int_distribution<int> nf(0, 2), fr(0, 1), mult(2, 5);
    AbelianGroup g;
    g.free_rank = allow_free ? fr(rng) : 0;
    int k = nf(rng);
    Int d = 1;
    for (int i = 0; i < k; ++i) {
        d *= mult(rng);
        g.invariant_factors.push_back(d);
    }
    return g;
}

}  // namespace

TEST_CASE("smith normal form on the pinned examples") {
    Mat m = from_rows({{2, 4}, {6, 8}});
    SmithForm f = smith_normal_form(m);
    // d1 = gcd of the entries, d1*d2 = |det|
    CHECK(f.divisors == std::vector<Int>{2, 4});
    check_smith_certificates(m);

    Mat z(2, 3);
    SmithForm fz = smith_normal_form(z);
    CHECK(fz.rank == 0);
    CHECK(fz.d == z);

    Mat id = Mat::identity(3);
    SmithForm fi = smith_normal_form(id);
    CHECK(fi.divisors == std::vector<Int>{1, 1, 1});
    check_smith_certificates(id);

    // empty shapes are legal
    smith_normal_form(Mat(0, 0));
    smith_normal_form(Mat(0, 4));
    smith_normal_form(Mat(4, 0));
}

TEST_CASE("smith certificates on random matrices") {
    std::mt19937 rng(20240811);
    for (int it = 0; it < 100; ++it) {
        std::uniform_int_distribution<std::size_t> dim(0, 7);
        Mat m = random_matrix(rng, dim(rng), dim(rng));
        check_smith_certificates(m);
        CHECK(smith_divisors(m) == smith_normal_form(m).divisors);
    }
}

TEST_CASE("group_from_presentation canonical forms") {
    // <h,t1,t2 | 2t1 = h, 3t2 = h> is free of rank 1
    Mat rel = from_rows({{-1, 2, 0}, {-1, 0, 3}});
    AbelianGroup g = group_from_presentation(3, rel);
    CHECK(g == AbelianGroup::free(1));

    CHECK(group_from_presentation(1, from_rows({{5}})) == AbelianGroup::cyclic(5));
    CHECK(group_from_presentation(4, Mat(0, 4)) == AbelianGroup::free(4));
    CHECK(group_from_presentation(1, from_rows({{1}})).is_trivial());
}

TEST_CASE("presentation invariance under generator permutation and dependent relations") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t n = dim(rng), m = dim(rng);
        Mat rel = random_matrix(rng, m, n, -5, 5);
        AbelianGroup g = group_from_presentation(n, rel);

        // permute generators (columns)
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Mat permuted(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) permuted(i, j) = rel(i, perm[j]);
        CHECK(group_from_presentation(n, permuted) == g);

        // append an integer combination of existing relations
        if (m >= 1) {
            std::uniform_int_distribution<int> coef(-3, 3);
            Mat extra(m + 1, n);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) extra(i, j) = rel(i, j);
            for (std::size_t i = 0; i < m; ++i) {
                Int c = coef(rng);
                for (std::size_t j = 0; j < n; ++j) extra(m, j) += c * rel(i, j);
            }
            CHECK(group_from_presentation(n, extra) == g);
        }
    }
}

TEST_CASE("hom_analyze: multiplication maps against enumeration") {
    // multiplication by d on Z/n, expected values frozen from the enumeration
    // oracle below
    for (long n = 2; n <= 12; ++n) {
        for (long d = 0; d <= 12; ++d) {
            AbelianGroup zn = AbelianGroup::cyclic(n);
            AbelianHom f = AbelianHom::multiplication_by(d, zn);
            HomAnalysis a = hom_analyze(f);

            long kcount = 0;
            for (long x = 0; x < n; ++x)
                if ((d * x) % n == 0) ++kcount;
            AbelianGroup expected = AbelianGroup::cyclic(kcount);
            CHECK(a.kernel == expected);
            CHECK(a.cokernel == expected);
            CHECK(a.image == AbelianGroup::cyclic(n / kcount));
        }
    }
}

TEST_CASE("hom_analyze: degenerate maps") {
    AbelianGroup a{1, {2, 6}};
    AbelianGroup b{0, {4}};
    AbelianHom z = AbelianHom::zero(a, b);
    HomAnalysis az = hom_analyze(z);
    CHECK(az.kernel == a);
    CHECK(az.cokernel == b);
    CHECK(az.image.is_trivial());

    AbelianHom id = AbelianHom::identity(AbelianGroup::free(2));
    HomAnalysis ai = hom_analyze(id);
    CHECK(ai.kernel.is_trivial());
    CHECK(ai.cokernel.is_trivial());
    CHECK(ai.image == AbelianGroup::free(2));
}

TEST_CASE("hom order law on random finite homs") {
    std::mt19937 rng(99);
    for (int it = 0; it < 60; ++it) {
        AbelianGroup a = random_group(rng, false), b = random_group(rng, false);
        AbelianHom f = random_hom(rng, a, b);
        HomAnalysis h = hom_analyze(f);
        CHECK(h.kernel.order() * h.image.order() == a.order());
        CHECK(h.image.order() * h.cokernel.order() == b.order());
    }
}

TEST_CASE("ill-defined hom is rejected at construction") {
    AbelianGroup z2 = AbelianGroup::cyclic(2);
    AbelianGroup z = AbelianGroup::free(1);
    Mat m(1, 1);
    m(0, 0) = 1;  // Z/2 -> Z sending the generator to 1 is not a hom
    CHECK_THROWS_AS(AbelianHom(z2, z, m), IllDefinedHom);
}

TEST_CASE("kernel-cokernel sequence: degenerate joints") {
    // g surjective, h injective -> ker(hg) = ker g and coker(hg) = coker h
    AbelianGroup z = AbelianGroup::free(1);
    AbelianGroup z4 = AbelianGroup::cyclic(4);
    AbelianGroup z8 = AbelianGroup::cyclic(8);
    Mat proj(1, 1);
    proj(0, 0) = 1;
    AbelianHom g(z, z4, proj);          // surjective
    Mat incl(1, 1);
    incl(0, 0) = 2;
    AbelianHom h(z4, z8, incl);         // injective (1 -> 2 mod 8)
    SixTermSequence s = kernel_cokernel_sequence(g, h);
    CHECK(s.exact);
    CHECK(s.groups[1] == hom_analyze(g).kernel);
    CHECK(s.groups[4] == hom_analyze(h).cokernel);
}

TEST_CASE("kernel-cokernel sequence: Z -> Z -> Z/4 enumeration fixture") {
    AbelianGroup z = AbelianGroup::free(1);
    AbelianGroup z4 = AbelianGroup::cyclic(4);
    Mat two(1, 1);
    two(0, 0) = 2;
    AbelianHom g(z, z, two);
    Mat pr(1, 1);
    pr(0, 0) = 1;
    AbelianHom h(z, z4, pr);
    SixTermSequence s = kernel_cokernel_sequence(g, h);
    CHECK(s.exact);
    // ker g = 0, ker hg = 2Z, ker h = 4Z, coker g = Z/2, coker hg = Z/2,
    // coker h = 0; frozen from direct enumeration of the three maps
    CHECK(s.groups[0].is_trivial());
    CHECK(s.groups[1] == AbelianGroup::free(1));
    CHECK(s.groups[2] == AbelianGroup::free(1));
    CHECK(s.groups[3] == AbelianGroup::cyclic(2));
    CHECK(s.groups[4] == AbelianGroup::cyclic(2));
    CHECK(s.groups[5].is_trivial());
}

TEST_CASE("kernel-cokernel sequence is exact on random compositions") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 40; ++it) {
        AbelianGroup a = random_group(rng), b = random_group(rng), c = random_group(rng);
        AbelianHom g = random_hom(rng, a, b);
        AbelianHom h = random_hom(rng, b, c);
        SixTermSequence s = kernel_cokernel_sequence(g, h);
        CHECK(s.exact);
        // order bookkeeping when everything is finite
        if (a.is_finite() && b.is_finite() && c.is_finite()) {
            Int left = s.groups[0].order() * s.groups[2].order() * s.groups[4].order();
            Int right = s.groups[1].order() * s.groups[3].order() * s.groups[5].order();
            CHECK(left == right);
        }
    }
}

TEST_CASE("resolve_extension splitting criteria") {
    GradedPiece z2 = GradedPiece::exact(AbelianGroup::cyclic(2));
    GradedPiece z3 = GradedPiece::exact(AbelianGroup::cyclic(3));
    ExtensionResult coprime = resolve_extension(z2, z3);
    CHECK(coprime.resolved);
    CHECK(coprime.group.discrete == AbelianGroup::cyclic(6));

    GradedPiece units = GradedPiece::symbol({SymbolicSummand::Kind::field_units, 0, 0});
    GradedPiece zn = GradedPiece::exact(AbelianGroup::free(3));
    ExtensionResult div = resolve_extension(units, zn);
    CHECK(div.resolved);
    CHECK(div.criterion == "free_quotient");  // free quotient certifies first

    ExtensionResult div2 = resolve_extension(units, z2);
    CHECK(div2.resolved);
    CHECK(div2.criterion == "divisible_sub");

    for (long p : {2, 3, 5}) {
        GradedPiece zp = GradedPiece::exact(AbelianGroup::cyclic(p));
        ExtensionResult open = resolve_extension(zp, zp);
        CHECK_FALSE(open.resolved);
        REQUIRE(open.order.has_value());
        CHECK(*open.order == Int(p) * p);
        CHECK(open.filtration.size() == 2);
    }
}

TEST_CASE("resolve_filtration never fabricates a split") {
    GradedPiece z2 = GradedPiece::exact(AbelianGroup::cyclic(2));
    GradedPiece z4 = GradedPiece::exact(AbelianGroup::cyclic(4));
    ExtensionResult r = resolve_filtration({z2, z4, z2});
    CHECK_FALSE(r.resolved);
    REQUIRE(r.order.has_value());
    CHECK(*r.order == 16);

    ExtensionResult t = resolve_filtration({GradedPiece::exact(AbelianGroup::trivial())});
    CHECK(t.resolved);
    CHECK(t.group.is_trivial());
}

TEST_CASE("rendering of canonical groups") {
    CHECK(to_string(AbelianGroup::trivial()) == "0");
    CHECK(to_string(AbelianGroup{1, {2, 6}}) == "Z^1 + Z/2 + Z/6");
    CHECK(to_string(AbelianGroup::cyclic(6)) == "Z/6");
}
