#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stackcoh/render.hpp"
#include "stackcoh/verify.hpp"

using namespace stackcurve;
using cli::fixtures::affine_one_point;
using cli::fixtures::dihedral;
using cli::fixtures::nodal_mixed;
using cli::fixtures::orbicurve_p23;
using cli::fixtures::projective_gerbe;
using cli::fixtures::tower;
using zlin::AbelianGroup;
using zlin::Int;

TEST_CASE("descriptor validation") {
    // wild: characteristic divides a stabilizer order
    CurveDescriptor wild = affine_one_point(2);
    wild.characteristic = 2;
    CHECK_THROWS_AS(validate_descriptor(wild), ValidationError);

    // valid: projective genus 1 with points of orders 2 and 3
    CurveDescriptor ok;
    ok.coarse.kind = CoarseCurve::Kind::projective;
    ok.coarse.genus = 1;
    ok.points = {{"a", 2, false, std::nullopt}, {"b", 3, false, std::nullopt}};
    CHECK_NOTHROW(validate_descriptor(ok));

    // local order 1 is rejected
    CurveDescriptor low = affine_one_point(1);
    CHECK_THROWS_AS(validate_descriptor(low), ValidationError);

    // duplicate labels, and every problem is listed
    CurveDescriptor dup;
    dup.coarse.kind = CoarseCurve::Kind::projective;
    dup.points = {{"p", 2, false, std::nullopt}, {"p", 1, false, std::nullopt}};
    try {
        validate_descriptor(dup);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.problems.size() == 2);
    }

    // towers need a cyclic generic stabilizer
    CurveDescriptor tw = tower(2);
    tw.generic_stabilizer = gcoh::FiniteGroup::abelian({2, 2});
    CHECK_THROWS_AS(validate_descriptor(tw), ValidationError);

    // explicit gerbes verify the embedding
    CurveDescriptor dh = dihedral(3);
    dh.points[0].stabilizer->embedding[1] = 2;  // no longer a homomorphism
    CHECK_THROWS_AS(validate_descriptor(dh), ValidationError);
}

TEST_CASE("picard of orbicurves") {
    PicardValue p23 = picard_orbicurve(orbicurve_p23());
    CHECK(p23.discrete_part == AbelianGroup::free(1));
    CHECK_FALSE(p23.divisible_part.has_value());  // genus 0

    PicardValue a5 = picard_orbicurve(affine_one_point(5));
    CHECK(a5.discrete_part == AbelianGroup::cyclic(5));

    CurveDescriptor plain;
    plain.coarse.kind = CoarseCurve::Kind::projective;
    plain.coarse.genus = 2;
    PicardValue pp = picard_orbicurve(plain);
    CHECK(pp.discrete_part == AbelianGroup::free(1));
    REQUIRE(pp.divisible_part.has_value());
    CHECK(pp.divisible_part->genus == 2);

    CHECK_THROWS(picard_orbicurve(nodal_mixed()));
}

TEST_CASE("orbicurve cohomology table") {
    CurveDescriptor d = orbicurve_p23();
    CHECK(cli::render_value(cohomology_orbicurve(d, 0)) == "k*");
    CHECK(cohomology_orbicurve(d, 2).value.is_trivial());
    CHECK(cohomology_orbicurve(d, 3).value.discrete == AbelianGroup::cyclic(6));
    CHECK(cohomology_orbicurve(d, 4).value.is_trivial());
    CHECK(cohomology_orbicurve(d, 5).value.discrete == AbelianGroup::cyclic(6));
}

TEST_CASE("twisted nodal table") {
    CurveDescriptor d = nodal_mixed();
    CHECK(cohomology_twisted_nodal(d, 2).value.is_trivial());
    CHECK(cohomology_twisted_nodal(d, 3).value.discrete == AbelianGroup::cyclic(6));
    CHECK(cohomology_twisted_nodal(d, 4).value.is_trivial());
    // degree 1 is a filtration with the symbolic coarse Picard group below
    CohomologyValue h1 = cohomology_twisted_nodal(d, 1);
    CHECK(h1.kind == CohomologyValue::Kind::filtration);
    CHECK(h1.filtration.size() == 2);

    // no stacky structure: plain nodal curve, everything above degree 1 dies
    CurveDescriptor plain = nodal_mixed();
    plain.points.clear();
    for (int r = 2; r <= 6; ++r)
        CHECK(cohomology_twisted_nodal(plain, r).value.is_trivial());
}

TEST_CASE("trivial gerbe assembly") {
    // genus 1, Z/2: even degrees (Z/2)^2, odd degrees Z/2 + Z/2
    CurveDescriptor d = projective_gerbe(1, 2);
    CohomologyValue h2 = cohomology_trivial_gerbe(d, 2);
    CHECK(h2.resolved());
    CHECK(h2.value.discrete == AbelianGroup{0, {2, 2}});
    CohomologyValue h3 = cohomology_trivial_gerbe(d, 3);
    CHECK(h3.resolved());
    CHECK(h3.value.discrete == AbelianGroup{0, {2, 2}});

    // affine line, one point of order 2, generic stabilizer Z/3: degree 2 dies
    CurveDescriptor aff = affine_one_point(2);
    aff.generic_stabilizer = gcoh::FiniteGroup::cyclic(3);
    CHECK(cohomology_trivial_gerbe(aff, 2).value.is_trivial());
}

TEST_CASE("cyclic tower pipeline") {
    for (long p : {2, 3}) {
        CurveDescriptor d = tower(p);
        CohomologyValue odd = cohomology_cyclic_tower(d, 3);
        CHECK(odd.kind == CohomologyValue::Kind::filtration);
        REQUIRE(odd.order().has_value());
        CHECK(*odd.order() == Int(p) * p * p);

        CohomologyValue h1 = cohomology_cyclic_tower(d, 1);
        CHECK(h1.kind == CohomologyValue::Kind::filtration);
        REQUIRE(h1.order().has_value());
        CHECK(*h1.order() == Int(p) * p);

        CHECK(cli::render_value(cohomology_cyclic_tower(d, 4)) ==
              cli::render_value(cohomology_cyclic_tower(d, 2)));
    }
}

TEST_CASE("beta factorization over the affine line") {
    BetaFactorization m3 = h2_via_beta_factorization(dihedral(3));
    CHECK(m3.h2.value.discrete == AbelianGroup::cyclic(3));
    CHECK(m3.audit.exact);

    BetaFactorization m5 = h2_via_beta_factorization(dihedral(5));
    CHECK(m5.h2.value.discrete == AbelianGroup::cyclic(5));

    // cyclic tower: the degree-2 transfer is injective, so the kernel dies
    for (long p : {2, 3}) {
        BetaFactorization bf = h2_via_beta_factorization(tower(p));
        CHECK(bf.h2.value.is_trivial());
        CHECK(bf.audit.exact);
    }
}

TEST_CASE("beta factorization on a trivial product matches the assembly") {
    for (long g0 : {2, 3}) {
        CurveDescriptor d = affine_one_point(2);
        d.generic_stabilizer = gcoh::FiniteGroup::cyclic(g0);
        BetaFactorization bf = h2_via_beta_factorization(d);
        CohomologyValue assembled = cohomology_trivial_gerbe(d, 2);
        REQUIRE(assembled.resolved());
        CHECK(bf.h2.value == assembled.value);
        CHECK(bf.audit.exact);
    }
}

TEST_CASE("a tower with trivial generic stabilizer degenerates to the orbicurve") {
    CurveDescriptor d = affine_one_point(3);
    d.gerbe = GerbeKind::cyclic_tower;
    for (int r = 2; r <= 5; ++r) {
        CohomologyValue t = cohomology_cyclic_tower(d, r);
        CohomologyValue o = cohomology_orbicurve(affine_one_point(3), r);
        CHECK(t.resolved());
        CHECK(t.value == o.value);
    }
}

TEST_CASE("beta factorization accepts supplied transfers") {
    CurveDescriptor d = tower(2);
    // supply the transfer H^2(Z/2) -> H^2(Z/4) computed elsewhere: 1 -> 2
    zlin::Mat m(1, 1);
    m(0, 0) = 2;
    std::vector<zlin::AbelianHom> taus = {
        zlin::AbelianHom(AbelianGroup::cyclic(2), AbelianGroup::cyclic(4), m)};
    BetaFactorization bf = h2_via_beta_factorization(d, gcoh::BarBudget::from_env(), &taus);
    CHECK(bf.h2.value.is_trivial());
}

TEST_CASE("crosscheck reports") {
    // trivial generic stabilizer: both routes give 0
    CrosscheckReport triv = h2_abelian_crosscheck(orbicurve_p23());
    CHECK(triv.verdict == CrosscheckReport::Verdict::equal);
    CHECK(triv.direct.value.is_trivial());

    // a trivial product is its own companion
    CrosscheckReport prod = h2_abelian_crosscheck(projective_gerbe(1, 2));
    CHECK(prod.verdict == CrosscheckReport::Verdict::equal);

    // dihedral: unequal, nonabelian
    CrosscheckReport dih = h2_abelian_crosscheck(dihedral(3));
    CHECK(dih.verdict == CrosscheckReport::Verdict::unequal);
    CHECK_FALSE(dih.abelian_stabilizers);

    // tower: unequal though abelian; flagged in the notes
    CrosscheckReport tw = h2_abelian_crosscheck(tower(3));
    CHECK(tw.verdict == CrosscheckReport::Verdict::unequal);
    CHECK(tw.abelian_stabilizers);
    bool flagged = false;
    for (const auto& n : tw.notes)
        if (n.rfind("flag:", 0) == 0) flagged = true;
    CHECK(flagged);
}

TEST_CASE("kummer quotients") {
    CHECK(kummer_h2(affine_one_point(5), 5) == AbelianGroup::cyclic(5));
    CurveDescriptor proj;
    proj.coarse.kind = CoarseCurve::Kind::projective;
    proj.coarse.genus = 3;
    CHECK(kummer_h2(proj, 7) == AbelianGroup::cyclic(7));
    CHECK(kummer_h2(proj, 1).is_trivial());
    CurveDescriptor wild = affine_one_point(3);
    wild.characteristic = 5;
    CHECK_THROWS_AS(kummer_h2(wild, 5), gcoh::WildInput);
}

TEST_CASE("gerbe root decomposition") {
    GerbeDecomposition a = gerbe_root_decomposition(affine_one_point(5), {Int(5)});
    CHECK(a.h2 == AbelianGroup::cyclic(5));
    CHECK(a.statement.find("surjective") != std::string::npos);

    CurveDescriptor d;
    d.coarse.kind = CoarseCurve::Kind::projective;
    d.points = {{"p", 2, false, std::nullopt}};
    GerbeDecomposition b = gerbe_root_decomposition(d, {Int(2), Int(2)});
    CHECK(b.h2 == AbelianGroup{0, {2, 2}});
    CHECK(gerbe_root_decomposition(d, {}).h2.is_trivial());
}

TEST_CASE("dispatcher shapes") {
    // explicit gerbe off the affine line: degree 2 is refused with a reason
    CurveDescriptor d = dihedral(3);
    d.coarse.kind = CoarseCurve::Kind::projective;
    d.coarse.genus = 0;
    CohomologyValue v = cohomology(d, 2);
    CHECK(v.kind == CohomologyValue::Kind::undetermined);
    CHECK(v.reason.rfind("unsupported_case", 0) == 0);

    // degrees beyond 2 for explicit gerbes are refused too
    CohomologyValue v3 = cohomology(dihedral(3), 3);
    CHECK(v3.kind == CohomologyValue::Kind::undetermined);

    // degree 1 of an explicit gerbe: Pic(Y) below Hom(G0, k*); here the
    // orders 2 and 3 are coprime, so the certified split fires
    CohomologyValue v1 = cohomology(dihedral(3), 1);
    CHECK(v1.resolved());
    CHECK(v1.value.discrete == AbelianGroup::cyclic(6));
    CHECK(v1.criterion == "coprime_orders");

    // whereas the tower's equal-order pieces stay a filtration
    CohomologyValue t1 = cohomology(tower(3), 1);
    CHECK(t1.kind == CohomologyValue::Kind::filtration);
    CHECK(t1.filtration.size() == 2);
}
