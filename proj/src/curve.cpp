#include "stackcoh/curve.hpp"

#include <set>
#include <sstream>

namespace stackcurve {

namespace {

std::string join_problems(const std::vector<std::string>& p) {
    std::ostringstream os;
    os << "invalid descriptor:";
    for (const auto& s : p) os << "\n  - " << s;
    return os.str();
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> p)
    : std::runtime_error(join_problems(p)), problems(std::move(p)) {}

std::vector<std::string> descriptor_problems(const CurveDescriptor& d) {
    std::vector<std::string> out;
    auto fail = [&](const std::string& s) { out.push_back(s); };

    if (d.characteristic < 0)
        fail("characteristic must be nonnegative");
    else if (d.characteristic > 0 && !is_prime(d.characteristic))
        fail("characteristic must be zero or a prime");

    if (d.coarse.kind == CoarseCurve::Kind::projective && d.coarse.genus < 0)
        fail("genus must be nonnegative");
    if (d.coarse.kind == CoarseCurve::Kind::nodal_projective) {
        if (d.coarse.normalization_genera.empty())
            fail("nodal coarse curve needs the genera of its normalization components");
        for (long g : d.coarse.normalization_genera)
            if (g < 0) fail("normalization genus must be nonnegative");
        if (d.coarse.node_count < 1) fail("nodal coarse curve needs at least one node");
    }

    std::set<std::string> labels;
    long marked_nodes = 0;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        const StackyPoint& pt = d.points[i];
        if (pt.label.empty()) fail("every stacky point needs a label");
        if (!labels.insert(pt.label).second) fail("duplicate point label '" + pt.label + "'");
        if (pt.index < 2) fail("point '" + pt.label + "': local order must be at least 2");
        if (pt.node) {
            ++marked_nodes;
            if (!d.nodal()) fail("point '" + pt.label + "': nodes need a nodal coarse curve");
        }
    }
    if (d.nodal() && marked_nodes > d.coarse.node_count)
        fail("more node-marked points than nodes on the coarse curve");

    // tameness: the characteristic divides no stabilizer order
    long p = d.characteristic;
    if (p > 0) {
        if (d.generic_stabilizer.order() % p == 0)
            fail("wild: characteristic divides the generic stabilizer order");
        for (const StackyPoint& pt : d.points)
            if ((d.generic_stabilizer.order() * pt.index) % p == 0)
                fail("wild: characteristic divides the stabilizer order at '" + pt.label + "'");
    }

    switch (d.gerbe) {
        case GerbeKind::trivial_product:
            for (const StackyPoint& pt : d.points)
                if (pt.stabilizer)
                    fail("point '" + pt.label + "': trivial products carry no stabilizer tables");
            break;
        case GerbeKind::cyclic_tower: {
            if (!d.generic_stabilizer.is_cyclic())
                fail("cyclic tower needs a cyclic generic stabilizer");
            // full stabilizers are cyclic of order |G0| * d; a cyclic group
            // has a unique subgroup of each order, so no further data is
            // required, but supplied tables must match
            for (const StackyPoint& pt : d.points)
                if (pt.stabilizer) {
                    if (!pt.stabilizer->group.is_cyclic() ||
                        pt.stabilizer->group.order() != d.generic_stabilizer.order() * pt.index)
                        fail("point '" + pt.label +
                             "': tower stabilizer must be cyclic of order |G0| * index");
                }
            break;
        }
        case GerbeKind::explicit_table: {
            if (!d.generic_stabilizer.has_materialized_table()) {
                fail("explicit gerbes need a generic stabilizer with a multiplication table");
                break;
            }
            for (const StackyPoint& pt : d.points) {
                if (!pt.stabilizer) {
                    fail("point '" + pt.label + "': explicit gerbes need a stabilizer table");
                    continue;
                }
                if (pt.stabilizer->group.order() != d.generic_stabilizer.order() * pt.index) {
                    fail("point '" + pt.label + "': stabilizer order must be |G0| * index");
                    continue;
                }
                try {
                    gcoh::Subgroup img = gcoh::verified_embedding(
                        pt.stabilizer->group, d.generic_stabilizer, pt.stabilizer->embedding);
                    if (img.index != pt.index)
                        fail("point '" + pt.label + "': embedding index differs from the point order");
                } catch (const std::exception& e) {
                    fail("point '" + pt.label + "': " + e.what());
                }
            }
            break;
        }
    }
    return out;
}

void validate_descriptor(const CurveDescriptor& d) {
    std::vector<std::string> problems = descriptor_problems(d);
    if (!problems.empty()) throw ValidationError(std::move(problems));
}

}  // namespace stackcurve
