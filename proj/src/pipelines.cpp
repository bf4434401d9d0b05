#include "stackcoh/pipelines.hpp"

#include <sstream>

#include "stackcoh/closed_forms.hpp"
#include "stackcoh/periodic.hpp"

namespace stackcurve {

using gcoh::BarBudget;
using gcoh::FiniteGroup;
using gcoh::ModuleDescriptor;
using zlin::AbelianGroup;
using zlin::AbelianHom;
using zlin::GradedPiece;
using zlin::Mat;

namespace {

GradedPiece units_piece(long characteristic) {
    return GradedPiece::symbol({zlin::SymbolicSummand::Kind::field_units, 0, characteristic});
}

GradedPiece coarse_picard_piece() {
    return GradedPiece::symbol({zlin::SymbolicSummand::Kind::coarse_picard, 0, 0});
}

AbelianGroup local_sum(const CurveDescriptor& d) {
    AbelianGroup s;
    for (const StackyPoint& pt : d.points) s = direct_sum(s, AbelianGroup::cyclic(pt.index));
    return s;
}

// Discrete Picard presentation: degree class h plus one root generator per
// point with d_l t_l = h (projective; also single-component nodal), or
// d_l t_l = 0 over the affine line.
AbelianGroup picard_discrete(const CurveDescriptor& d) {
    const std::size_t n = d.points.size();
    if (d.coarse.kind == CoarseCurve::Kind::affine_line) {
        Mat rel(n, n);
        for (std::size_t l = 0; l < n; ++l) rel(l, l) = d.points[l].index;
        return zlin::group_from_presentation(n, rel);
    }
    if (d.nodal() && d.coarse.normalization_genera.size() != 1)
        throw std::invalid_argument(
            "discrete Picard data needs a single-component normalization");
    Mat rel(n, n + 1);
    for (std::size_t l = 0; l < n; ++l) {
        rel(l, 0) = -1;
        rel(l, l + 1) = d.points[l].index;
    }
    return zlin::group_from_presentation(n + 1, rel);
}

// the coarse class sublattice quotient must reproduce the local sum
void check_picard_quotient(const CurveDescriptor& d, const AbelianGroup& discrete) {
    const std::size_t n = d.points.size();
    AbelianGroup quotient;
    if (d.coarse.kind == CoarseCurve::Kind::affine_line) {
        quotient = discrete;
    } else {
        Mat rel(n + 1, n + 1);
        for (std::size_t l = 0; l < n; ++l) {
            rel(l, 0) = -1;
            rel(l, l + 1) = d.points[l].index;
        }
        rel(n, 0) = 1;  // kill the coarse class
        quotient = zlin::group_from_presentation(n + 1, rel);
    }
    if (!(quotient == local_sum(d)))
        throw std::logic_error("Picard quotient law violated");
}

std::vector<zlin::Int> g0_factors(const CurveDescriptor& d) {
    return d.generic_stabilizer.invariant_factors();
}

// H^k(G0, Pic Y) for abelian G0: divisible and discrete summands separately.
AbelianGroup g0_picard_cohomology(const CurveDescriptor& d, const PicardValue& pic, int k) {
    AbelianGroup out = gcoh::periodic_cohomology(g0_factors(d), pic.discrete_part, k);
    if (pic.divisible_part && k >= 1) {
        ModuleDescriptor p0 =
            ModuleDescriptor::picard0(pic.divisible_part->genus, d.characteristic);
        out = direct_sum(out, gcoh::divisible_cohomology(d.generic_stabilizer, p0, k).value.discrete);
    } else if (pic.divisible_part && k == 0) {
        throw std::logic_error("degree-0 Picard coefficients are handled by the caller");
    }
    return out;
}

CurveDescriptor trivial_gerbe_companion(const CurveDescriptor& d) {
    CurveDescriptor c = d;
    c.gerbe = GerbeKind::trivial_product;
    for (StackyPoint& pt : c.points) pt.stabilizer.reset();
    return c;
}

std::string order_string(const std::optional<zlin::Int>& o) {
    if (!o) return "infinite";
    std::ostringstream os;
    os << *o;
    return os.str();
}

}  // namespace

PicardValue picard_orbicurve(const CurveDescriptor& d) {
    validate_descriptor(d);
    if (d.nodal())
        throw std::invalid_argument("nodal coarse curves go through the twisted-nodal pipeline");
    PicardValue v;
    v.discrete_part = picard_discrete(d);
    if (d.coarse.kind == CoarseCurve::Kind::projective && d.coarse.genus > 0)
        v.divisible_part = zlin::SymbolicSummand{zlin::SymbolicSummand::Kind::picard_zero,
                                                 d.coarse.genus, d.characteristic};
    v.provenance = "orbicurve_picard";
    check_picard_quotient(d, v.discrete_part);
    return v;
}

CohomologyValue cohomology_orbicurve(const CurveDescriptor& d, int r) {
    validate_descriptor(d);
    if (d.nodal()) throw std::invalid_argument("nodal coarse: use the twisted-nodal pipeline");
    if (!d.generic_stabilizer.is_trivial_group() || d.gerbe != GerbeKind::trivial_product)
        throw std::invalid_argument("orbicurve pipeline needs a trivial generic stabilizer");
    if (r < 0) throw std::invalid_argument("negative degree");

    const char* prov = "orbicurve_table";
    if (r == 0) return CohomologyValue::exact_value(0, units_piece(d.characteristic), prov);
    if (r == 1)
        return CohomologyValue::exact_value(1, picard_orbicurve(d).as_piece(), prov);
    if (r % 2 == 0)
        return CohomologyValue::exact_value(r, GradedPiece::exact(AbelianGroup::trivial()), prov);
    return CohomologyValue::exact_value(r, GradedPiece::exact(local_sum(d)), prov);
}

CohomologyValue cohomology_twisted_nodal(const CurveDescriptor& d, int r) {
    validate_descriptor(d);
    if (!d.nodal()) throw std::invalid_argument("twisted-nodal pipeline needs a nodal coarse curve");
    if (!d.generic_stabilizer.is_trivial_group() || d.gerbe != GerbeKind::trivial_product)
        throw std::invalid_argument("twisted-nodal pipeline needs a trivial generic stabilizer");
    if (r < 0) throw std::invalid_argument("negative degree");

    const char* prov = "twisted_nodal_table";
    if (r == 0) return CohomologyValue::exact_value(0, units_piece(d.characteristic), prov);
    if (r == 1) {
        // 0 -> Pic(C) -> Pic(Y) -> sum over all stacky points -> 0; the
        // coarse Picard group stays symbolic, so this is reported as a
        // filtration unless the quotient vanishes.
        zlin::ExtensionResult e =
            zlin::resolve_extension(coarse_picard_piece(), GradedPiece::exact(local_sum(d)));
        CohomologyValue v = CohomologyValue::from_extension(1, e, prov);
        v.notes.push_back("sub piece is the Picard group of the coarse nodal curve");
        return v;
    }
    if (r % 2 == 0)
        return CohomologyValue::exact_value(r, GradedPiece::exact(AbelianGroup::trivial()), prov);
    // every point with nontrivial stabilizer contributes, nodes included
    return CohomologyValue::exact_value(r, GradedPiece::exact(local_sum(d)), prov);
}

CohomologyValue cohomology_trivial_gerbe(const CurveDescriptor& d, int r, const BarBudget&) {
    validate_descriptor(d);
    if (d.nodal())
        return CohomologyValue::undetermined_value(
            r, "unsupported_case: trivial-gerbe assembly over a nodal coarse curve",
            "product_gerbe_assembly");
    if (!d.generic_stabilizer.is_abelian())
        throw std::invalid_argument("trivial-gerbe assembly needs an abelian generic stabilizer");
    if (r < 0) throw std::invalid_argument("negative degree");

    const char* prov = "product_gerbe_assembly";
    const long p = d.characteristic;
    const FiniteGroup& g0 = d.generic_stabilizer;

    if (r == 0) return CohomologyValue::exact_value(0, units_piece(p), prov);

    PicardValue pic = picard_orbicurve(d);
    if (r == 1) {
        // Pic(Y) + Hom(G0, k*): the product structure splits degree 1.
        GradedPiece piece = pic.as_piece();
        piece.discrete = direct_sum(piece.discrete, gcoh::hom_to_units(g0, p));
        CohomologyValue v = CohomologyValue::exact_value(1, piece, prov);
        v.criterion = "product_splitting";
        return v;
    }

    // graded pieces, innermost first
    GradedPiece p1 = GradedPiece::exact(
        gcoh::divisible_cohomology(g0, ModuleDescriptor::units(p), r).value.discrete);
    GradedPiece p2 = GradedPiece::exact(g0_picard_cohomology(d, pic, r - 1));
    AbelianGroup quot;
    for (const StackyPoint& pt : d.points)
        quot = direct_sum(quot, gcoh::product_quotient_term(g0_factors(d), pt.index, r - 1));
    GradedPiece p3 = GradedPiece::exact(quot);

    // The units piece is split off by restricting to a fiber over any
    // non-stacky rational point, so only the top two pieces can interact.
    zlin::ExtensionResult inner = zlin::resolve_extension(p2, p3);
    CohomologyValue v;
    if (inner.resolved) {
        v = CohomologyValue::exact_value(r, piece_direct_sum(p1, inner.group), prov);
        v.criterion = p1.is_trivial() ? inner.criterion : ("section_split+" + inner.criterion);
    } else {
        std::vector<GradedPiece> pieces;
        for (const auto& piece : {p1, p2, p3})
            if (!piece.is_trivial()) pieces.push_back(piece);
        zlin::ExtensionResult e;
        e.resolved = false;
        e.filtration = pieces;
        e.order = std::nullopt;
        {
            zlin::Int o = 1;
            bool finite = true;
            for (const auto& piece : pieces) {
                auto po = piece.order();
                if (!po) {
                    finite = false;
                    break;
                }
                o *= *po;
            }
            if (finite) e.order = o;
        }
        v = CohomologyValue::from_extension(r, e, prov);
    }

    // Cyclic stabilizers admit a two-piece shortcut (dual group plus
    // H^2(G0, Pic Y)); when stacky points make the quotient term nontrivial
    // the two evaluations differ, which is surfaced, not adjudicated.
    if (g0.is_cyclic() && !g0.is_trivial_group() && r % 2 == 1) {
        AbelianGroup shortcut =
            direct_sum(gcoh::hom_to_units(g0, p), g0_picard_cohomology(d, pic, 2));
        std::optional<zlin::Int> assembly_order = v.order();
        if (shortcut.order() != assembly_order) {
            std::ostringstream os;
            os << "flag: two-piece cyclic shortcut Hom(G0,k*) + H^2(G0,Pic Y) has order "
               << shortcut.order() << " but the three-piece assembly totals "
               << order_string(assembly_order) << " (quotient term " << to_string(p3.discrete)
               << ")";
            v.notes.push_back(os.str());
        }
    }
    return v;
}

CohomologyValue cohomology_cyclic_tower(const CurveDescriptor& d, int r, const BarBudget& budget) {
    validate_descriptor(d);
    if (d.gerbe != GerbeKind::cyclic_tower)
        throw std::invalid_argument("cyclic-tower pipeline needs a cyclic_tower descriptor");
    if (d.nodal())
        return CohomologyValue::undetermined_value(
            r, "unsupported_case: cyclic towers over nodal coarse curves", "cyclic_tower");
    if (r < 0) throw std::invalid_argument("negative degree");

    const char* prov = "cyclic_tower";
    const long p = d.characteristic;
    const FiniteGroup& g0 = d.generic_stabilizer;

    if (r == 0) return CohomologyValue::exact_value(0, units_piece(p), prov);

    PicardValue pic = picard_orbicurve(d);
    if (r == 1) {
        // 0 -> Pic(Y) -> H^1 -> Hom(G0, K*) -> 0; resolved only under a
        // certified criterion (the non-split tower regression lives here).
        zlin::ExtensionResult e = zlin::resolve_extension(
            pic.as_piece(), GradedPiece::exact(gcoh::hom_to_units(g0, p)));
        return CohomologyValue::from_extension(1, e, prov);
    }

    if (r % 2 == 0) {
        CohomologyValue v = cohomology_trivial_gerbe(trivial_gerbe_companion(d), 2, budget);
        v.degree = r;
        v.provenance = prov;
        v.notes.push_back("even degrees reproduce the degree-2 trivial-gerbe value");
        return v;
    }

    // odd r >= 3: [H^2(G0, Pic Y), sum_l Z/d_l, Hom(G0, k*)]
    GradedPiece q1 = GradedPiece::exact(g0_picard_cohomology(d, pic, 2));
    GradedPiece q2 = GradedPiece::exact(local_sum(d));
    GradedPiece q3 = GradedPiece::exact(gcoh::hom_to_units(g0, p));
    zlin::ExtensionResult e = zlin::resolve_filtration({q1, q2, q3});
    CohomologyValue v = CohomologyValue::from_extension(r, e, prov);
    v.notes.push_back("pieces: [H^2(G0,Pic Y) | sum_l Z/d_l | Hom(G0,k*)], innermost first");
    return v;
}

BetaFactorization h2_via_beta_factorization(const CurveDescriptor& d, const BarBudget& budget,
                                            const std::vector<AbelianHom>* supplied_transfers) {
    validate_descriptor(d);
    if (d.coarse.kind != CoarseCurve::Kind::affine_line)
        throw std::invalid_argument(
            "the divisor-map factorization is modeled over the affine line only");
    if (!d.generic_stabilizer.is_abelian())
        throw std::invalid_argument("the kernel piece needs an abelian generic stabilizer");
    if (supplied_transfers && supplied_transfers->size() != d.points.size())
        throw std::invalid_argument("one supplied transfer per stacky point is required");

    const FiniteGroup& g0 = d.generic_stabilizer;
    BetaFactorization out;

    // per-point transfers H^2(G0, Z) -> H^2(G_sigma, Z)
    std::vector<AbelianHom> taus;
    for (std::size_t l = 0; l < d.points.size(); ++l) {
        const StackyPoint& pt = d.points[l];
        if (supplied_transfers) {
            taus.push_back((*supplied_transfers)[l]);
            out.notes.push_back("point '" + pt.label + "': transfer supplied by the caller");
            continue;
        }
        gcoh::HomValue tau{AbelianHom{}, gcoh::Provenance::bar_oracle};
        switch (d.gerbe) {
            case GerbeKind::cyclic_tower: {
                FiniteGroup big = FiniteGroup::cyclic(g0.order() * pt.index);
                tau = gcoh::transfer_map(big, {static_cast<int>(pt.index)}, 2, budget);
                break;
            }
            case GerbeKind::explicit_table: {
                gcoh::Subgroup sub = gcoh::verified_embedding(pt.stabilizer->group, g0,
                                                              pt.stabilizer->embedding);
                tau = gcoh::transfer_map(pt.stabilizer->group, sub, 2, budget);
                break;
            }
            case GerbeKind::trivial_product: {
                // G_sigma = G0 x Z/d: the transfer is the index times the
                // projection pullback
                AbelianHom pull =
                    gcoh::product_projection_pullback(g0.invariant_factors(), {pt.index}, 2);
                tau = {AbelianHom(pull.domain(), pull.codomain(),
                                  pull.matrix().scaled(pt.index)),
                       gcoh::Provenance::fallback_law};
                break;
            }
        }
        out.notes.push_back("point '" + pt.label +
                            "': transfer via " + gcoh::to_string(tau.provenance));
        taus.push_back(tau.hom);
    }

    // beta_0 restricted to the distinguished components: zero on
    // H^2(G0, units), the identity on each local H^2(G0, Z). Non-stacky
    // points carry the identity transfer and drop out.
    AbelianGroup k0 =
        gcoh::divisible_cohomology(g0, ModuleDescriptor::units(d.characteristic), 2)
            .value.discrete;
    AbelianGroup h2g0;
    AbelianHom tau_total;
    bool first = true;
    for (const AbelianHom& t : taus) {
        h2g0 = direct_sum(h2g0, t.domain());
        tau_total = first ? t : tau_total.direct_sum(t);
        first = false;
    }
    if (first) tau_total = AbelianHom::zero(AbelianGroup::trivial(), AbelianGroup::trivial());

    zlin::DirectSumData dom = zlin::direct_sum_data(k0, h2g0);
    AbelianHom g(dom.sum, h2g0, dom.project_b);

    out.audit = zlin::kernel_cokernel_sequence(g, tau_total);
    if (!out.audit.exact) throw std::logic_error("six-term audit failed to be exact");
    out.h2 = CohomologyValue::exact_value(
        2, GradedPiece::exact(out.audit.groups[1]), "beta_factorization");
    out.h2.notes.push_back(
        "kernel of the componentwise transfer at the stacky points; non-stacky components "
        "carry the identity transfer and contribute nothing");
    out.notes.push_back("degree-1 stabilizer cohomology with integer coefficients vanishes, "
                        "so the degree-2 value equals the kernel of the divisor-map factorization");
    return out;
}

CrosscheckReport h2_abelian_crosscheck(const CurveDescriptor& d, const BarBudget& budget) {
    validate_descriptor(d);
    CrosscheckReport rep;

    rep.abelian_stabilizers = d.generic_stabilizer.is_abelian();
    for (const StackyPoint& pt : d.points)
        if (pt.stabilizer && !pt.stabilizer->group.is_abelian()) rep.abelian_stabilizers = false;

    // direct route
    if (d.coarse.kind == CoarseCurve::Kind::affine_line && d.gerbe != GerbeKind::trivial_product) {
        BetaFactorization bf = h2_via_beta_factorization(d, budget);
        rep.direct = bf.h2;
        rep.direct_audit = bf.audit;
        for (const auto& n : bf.notes) rep.notes.push_back(n);
    } else if (d.gerbe == GerbeKind::cyclic_tower) {
        rep.direct = cohomology_cyclic_tower(d, 2, budget);
        rep.notes.push_back("direct route delegates even degrees to the trivial-gerbe value");
    } else {
        rep.direct = cohomology_trivial_gerbe(d, 2, budget);
        rep.notes.push_back("descriptor is already a trivial product; both routes coincide");
    }

    // banding-only route
    if (d.generic_stabilizer.is_abelian()) {
        rep.gerbe_side = cohomology_trivial_gerbe(trivial_gerbe_companion(d), 2, budget);
    } else {
        rep.gerbe_side = CohomologyValue::undetermined_value(
            2, "unsupported_case: trivial-gerbe assembly needs an abelian generic stabilizer",
            "product_gerbe_assembly");
    }

    if (rep.direct.resolved() && rep.gerbe_side.resolved()) {
        rep.verdict = (rep.direct.value == rep.gerbe_side.value)
                          ? CrosscheckReport::Verdict::equal
                          : CrosscheckReport::Verdict::unequal;
    } else {
        rep.verdict = CrosscheckReport::Verdict::incomparable;
    }

    if (rep.verdict == CrosscheckReport::Verdict::unequal) {
        if (rep.abelian_stabilizers)
            rep.notes.push_back(
                "flag: the direct kernel evaluation and the banding-only route disagree even "
                "though all stabilizers are abelian; both audits attached, neither value "
                "adjudicated");
        else
            rep.notes.push_back(
                "the degree-2 value depends on the gerbe beyond its banding once stabilizers "
                "are nonabelian");
    }
    return rep;
}

zlin::AbelianGroup kummer_h2(const CurveDescriptor& d, const zlin::Int& n) {
    validate_descriptor(d);
    if (n < 1) throw std::invalid_argument("the root order must be positive");
    if (d.characteristic > 0 && n % d.characteristic == 0)
        throw gcoh::WildInput("root order divisible by the characteristic");
    if (!d.generic_stabilizer.is_trivial_group())
        throw std::invalid_argument("Kummer computation needs a trivial generic stabilizer");
    // degree-2 unit-sheaf cohomology of the orbicurve vanishes, so the
    // mu_n-cohomology is Pic(Y)/n; the divisible part contributes nothing
    return zlin::quotient_by(picard_discrete(d), n);
}

GerbeDecomposition gerbe_root_decomposition(const CurveDescriptor& d,
                                            const std::vector<zlin::Int>& factors) {
    validate_descriptor(d);
    if (!d.generic_stabilizer.is_trivial_group())
        throw std::invalid_argument("gerbe classification is computed over the orbicurve");
    GerbeDecomposition out;
    for (const zlin::Int& f : factors) {
        if (f < 1) throw std::invalid_argument("band factors must be positive");
        if (d.characteristic > 0 && f % d.characteristic == 0)
            throw gcoh::WildInput("band order divisible by the characteristic");
        AbelianGroup piece = zlin::quotient_by(picard_discrete(d), f);
        out.per_factor.push_back(piece);
        out.h2 = direct_sum(out.h2, piece);
    }
    out.statement =
        "every banded gerbe with this band is a fiber product of root constructions of line "
        "bundles: the classifying map from tuples of line bundles onto H^2(Y, G0) is surjective";
    return out;
}

CohomologyValue cohomology(const CurveDescriptor& d, int r, const BarBudget& budget) {
    validate_descriptor(d);
    if (r < 0) throw std::invalid_argument("negative degree");

    if (d.gerbe == GerbeKind::cyclic_tower) return cohomology_cyclic_tower(d, r, budget);

    if (d.gerbe == GerbeKind::trivial_product) {
        if (d.generic_stabilizer.is_trivial_group())
            return d.nodal() ? cohomology_twisted_nodal(d, r) : cohomology_orbicurve(d, r);
        if (d.generic_stabilizer.is_abelian() && !d.nodal())
            return cohomology_trivial_gerbe(d, r, budget);
        if (r == 0)
            return CohomologyValue::exact_value(0, units_piece(d.characteristic), "main_sequence");
        return CohomologyValue::undetermined_value(
            r, "unsupported_case: nonabelian or nodal trivial products beyond degree 0",
            "main_sequence");
    }

    // explicit gerbe
    if (r == 0)
        return CohomologyValue::exact_value(0, units_piece(d.characteristic), "main_sequence");
    if (r == 1) {
        PicardValue pic = picard_orbicurve(d);
        zlin::ExtensionResult e = zlin::resolve_extension(
            pic.as_piece(),
            GradedPiece::exact(gcoh::hom_to_units(d.generic_stabilizer, d.characteristic)));
        return CohomologyValue::from_extension(1, e, "main_sequence");
    }
    if (r == 2 && d.coarse.kind == CoarseCurve::Kind::affine_line)
        return h2_via_beta_factorization(d, budget).h2;
    return CohomologyValue::undetermined_value(
        r, "unsupported_case: explicit gerbes are evaluated at degree 2 over the affine line",
        "beta_factorization");
}

}  // namespace stackcurve
