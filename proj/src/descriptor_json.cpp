#include "stackcoh/descriptor_json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cli {

using nlohmann::json;
using stackcurve::CoarseCurve;
using stackcurve::CurveDescriptor;
using stackcurve::GerbeKind;
using stackcurve::StackyPoint;

namespace {

struct Collector {
    std::vector<std::string>& problems;
    void fail(const std::string& where, const std::string& what) {
        problems.push_back(where + ": " + what);
    }
};

bool expect_object(Collector& c, const json& j, const std::string& where,
                   const std::set<std::string>& allowed) {
    if (!j.is_object()) {
        c.fail(where, "expected an object");
        return false;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) c.fail(where, "unknown key '" + it.key() + "'");
    return true;
}

bool get_int(Collector& c, const json& j, const std::string& where, long& out) {
    if (!j.is_number_integer()) {
        c.fail(where, "expected an exact integer");
        return false;
    }
    out = j.get<long>();
    return true;
}

bool parse_table(Collector& c, const json& j, const std::string& where,
                 std::vector<std::vector<int>>& out) {
    if (!j.is_array() || j.empty()) {
        c.fail(where, "expected a nonempty array of rows");
        return false;
    }
    out.clear();
    for (const auto& row : j) {
        if (!row.is_array()) {
            c.fail(where, "expected rows of integers");
            return false;
        }
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) {
                c.fail(where, "table entries must be exact integers");
                return false;
            }
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return true;
}

bool parse_group(Collector& c, const json& j, const std::string& where, gcoh::FiniteGroup& out) {
    if (!expect_object(c, j, where, {"kind", "order", "factors", "table"})) return false;
    std::string kind = j.value("kind", "");
    try {
        if (kind == "trivial") {
            out = gcoh::FiniteGroup::trivial();
        } else if (kind == "cyclic") {
            long order = 0;
            if (!j.contains("order") || !get_int(c, j.at("order"), where + ".order", order))
                return false;
            out = gcoh::FiniteGroup::cyclic(order);
        } else if (kind == "abelian") {
            if (!j.contains("factors") || !j.at("factors").is_array()) {
                c.fail(where, "abelian groups need a 'factors' array");
                return false;
            }
            std::vector<zlin::Int> factors;
            for (const auto& f : j.at("factors")) {
                long v = 0;
                if (!get_int(c, f, where + ".factors", v)) return false;
                factors.push_back(v);
            }
            out = gcoh::FiniteGroup::abelian(factors);
        } else if (kind == "table") {
            std::vector<std::vector<int>> table;
            if (!j.contains("table") || !parse_table(c, j.at("table"), where + ".table", table))
                return false;
            out = gcoh::FiniteGroup::from_table(table);
        } else {
            c.fail(where, "kind must be trivial | cyclic | abelian | table");
            return false;
        }
    } catch (const std::exception& e) {
        c.fail(where, e.what());
        return false;
    }
    return true;
}

}  // namespace

ParsedDescriptor parse_descriptor_json(const std::string& text) {
    ParsedDescriptor out;
    Collector c{out.problems};

    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        c.fail("input", e.what());
        return out;
    }
    if (!expect_object(c, j, "descriptor",
                       {"characteristic", "coarse", "generic_stabilizer", "stacky_points",
                        "gerbe"}))
        return out;

    if (j.contains("characteristic"))
        get_int(c, j.at("characteristic"), "characteristic", out.descriptor.characteristic);
    else
        c.fail("descriptor", "missing key 'characteristic'");

    // coarse
    if (!j.contains("coarse")) {
        c.fail("descriptor", "missing key 'coarse'");
    } else if (expect_object(c, j.at("coarse"), "coarse",
                             {"kind", "genus", "normalization_genera", "node_count"})) {
        const json& co = j.at("coarse");
        std::string kind = co.value("kind", "");
        if (kind == "projective") {
            out.descriptor.coarse.kind = CoarseCurve::Kind::projective;
            if (co.contains("genus")) get_int(c, co.at("genus"), "coarse.genus", out.descriptor.coarse.genus);
        } else if (kind == "affine_line") {
            out.descriptor.coarse.kind = CoarseCurve::Kind::affine_line;
        } else if (kind == "nodal_projective") {
            out.descriptor.coarse.kind = CoarseCurve::Kind::nodal_projective;
            if (co.contains("normalization_genera") && co.at("normalization_genera").is_array()) {
                for (const auto& g : co.at("normalization_genera")) {
                    long v = 0;
                    if (get_int(c, g, "coarse.normalization_genera", v))
                        out.descriptor.coarse.normalization_genera.push_back(v);
                }
            } else {
                c.fail("coarse", "nodal_projective needs 'normalization_genera'");
            }
            if (co.contains("node_count"))
                get_int(c, co.at("node_count"), "coarse.node_count", out.descriptor.coarse.node_count);
            else
                c.fail("coarse", "nodal_projective needs 'node_count'");
        } else {
            c.fail("coarse", "kind must be projective | affine_line | nodal_projective");
        }
    }

    // generic stabilizer
    if (j.contains("generic_stabilizer"))
        parse_group(c, j.at("generic_stabilizer"), "generic_stabilizer",
                    out.descriptor.generic_stabilizer);
    else
        c.fail("descriptor", "missing key 'generic_stabilizer'");

    // stacky points
    if (j.contains("stacky_points")) {
        if (!j.at("stacky_points").is_array()) {
            c.fail("stacky_points", "expected an array");
        } else {
            std::size_t i = 0;
            for (const auto& pj : j.at("stacky_points")) {
                std::ostringstream tag;
                tag << "stacky_points[" << i++ << "]";
                StackyPoint pt;
                if (!expect_object(c, pj, tag.str(), {"label", "index", "node", "stabilizer"}))
                    continue;
                if (pj.contains("label") && pj.at("label").is_string())
                    pt.label = pj.at("label").get<std::string>();
                else
                    c.fail(tag.str(), "needs a string 'label'");
                long idx = 0;
                if (pj.contains("index") && get_int(c, pj.at("index"), tag.str() + ".index", idx))
                    pt.index = idx;
                else if (!pj.contains("index"))
                    c.fail(tag.str(), "needs an integer 'index'");
                if (pj.contains("node")) {
                    if (pj.at("node").is_boolean())
                        pt.node = pj.at("node").get<bool>();
                    else
                        c.fail(tag.str(), "'node' must be a boolean");
                }
                if (pj.contains("stabilizer")) {
                    const json& sj = pj.at("stabilizer");
                    if (expect_object(c, sj, tag.str() + ".stabilizer", {"table", "embedding"})) {
                        stackcurve::StabilizerSpec spec;
                        std::vector<std::vector<int>> table;
                        bool ok = sj.contains("table") &&
                                  parse_table(c, sj.at("table"), tag.str() + ".stabilizer.table", table);
                        if (ok) {
                            try {
                                spec.group = gcoh::FiniteGroup::from_table(table);
                            } catch (const std::exception& e) {
                                c.fail(tag.str() + ".stabilizer.table", e.what());
                                ok = false;
                            }
                        }
                        if (sj.contains("embedding") && sj.at("embedding").is_array()) {
                            for (const auto& v : sj.at("embedding")) {
                                long x = 0;
                                if (get_int(c, v, tag.str() + ".stabilizer.embedding", x))
                                    spec.embedding.push_back(static_cast<int>(x));
                            }
                        } else {
                            c.fail(tag.str() + ".stabilizer", "needs an 'embedding' array");
                            ok = false;
                        }
                        if (ok) pt.stabilizer = std::move(spec);
                    }
                }
                out.descriptor.points.push_back(std::move(pt));
            }
        }
    } else {
        c.fail("descriptor", "missing key 'stacky_points'");
    }

    // gerbe
    if (!j.contains("gerbe")) {
        c.fail("descriptor", "missing key 'gerbe'");
    } else if (expect_object(c, j.at("gerbe"), "gerbe", {"kind"})) {
        std::string kind = j.at("gerbe").value("kind", "");
        if (kind == "trivial_product")
            out.descriptor.gerbe = GerbeKind::trivial_product;
        else if (kind == "cyclic_tower")
            out.descriptor.gerbe = GerbeKind::cyclic_tower;
        else if (kind == "explicit")
            out.descriptor.gerbe = GerbeKind::explicit_table;
        else
            c.fail("gerbe", "kind must be trivial_product | cyclic_tower | explicit");
    }

    return out;
}

stackcurve::CurveDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw stackcurve::ValidationError({"cannot open input file '" + path + "'"});
    std::ostringstream buf;
    buf << in.rdbuf();
    ParsedDescriptor parsed = parse_descriptor_json(buf.str());
    if (!parsed.ok()) throw stackcurve::ValidationError(std::move(parsed.problems));
    stackcurve::validate_descriptor(parsed.descriptor);
    return parsed.descriptor;
}

}  // namespace cli
