#include "stackcoh/render.hpp"

#include <sstream>

namespace cli {

using nlohmann::ordered_json;
using stackcurve::CohomologyValue;
using stackcurve::CrosscheckReport;

std::string render_group(const zlin::AbelianGroup& g) { return zlin::to_string(g); }
std::string render_piece(const zlin::GradedPiece& p) { return zlin::to_string(p); }

std::string render_value(const CohomologyValue& v) {
    switch (v.kind) {
        case CohomologyValue::Kind::exact:
            return render_piece(v.value);
        case CohomologyValue::Kind::filtration: {
            std::ostringstream os;
            os << "[";
            for (std::size_t i = 0; i < v.filtration.size(); ++i) {
                if (i) os << " | ";
                os << render_piece(v.filtration[i]);
            }
            os << "]";
            return os.str();
        }
        case CohomologyValue::Kind::undetermined:
            return "undetermined(" + v.reason + ")";
    }
    return "?";
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

zlin::Int parse_int_at(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument("expected a number in '" + s + "'");
    return zlin::Int(s.substr(start, i - start));
}

}  // namespace

zlin::AbelianGroup parse_group_string(const std::string& s) {
    std::size_t i = 0;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '0') {
        ++i;
        skip_ws(s, i);
        if (i == s.size()) return zlin::AbelianGroup::trivial();
        throw std::invalid_argument("trailing input after '0'");
    }
    zlin::AbelianGroup g;
    bool expect_term = true;
    while (i < s.size()) {
        skip_ws(s, i);
        if (!expect_term) {
            if (s[i] != '+') throw std::invalid_argument("expected '+' in '" + s + "'");
            ++i;
            skip_ws(s, i);
        }
        if (i >= s.size() || s[i] != 'Z') throw std::invalid_argument("expected 'Z' in '" + s + "'");
        ++i;
        if (i < s.size() && s[i] == '^') {
            ++i;
            zlin::Int k = parse_int_at(s, i);
            g.free_rank += static_cast<std::size_t>(k);
        } else if (i < s.size() && s[i] == '/') {
            ++i;
            zlin::Int d = parse_int_at(s, i);
            if (d < 2) throw std::invalid_argument("torsion factor must be at least 2");
            g.invariant_factors.push_back(d);
        } else {
            g.free_rank += 1;  // bare "Z"
        }
        expect_term = false;
        skip_ws(s, i);
        if (i < s.size() && s[i] == '+') continue;
    }
    // normalize the factor list into a chain
    zlin::AbelianGroup canon = g;
    if (!g.invariant_factors.empty()) {
        zlin::Mat rel(g.invariant_factors.size(), g.invariant_factors.size());
        for (std::size_t k = 0; k < g.invariant_factors.size(); ++k)
            rel(k, k) = g.invariant_factors[k];
        canon = zlin::group_from_presentation(g.invariant_factors.size(), rel);
        canon.free_rank = g.free_rank;
    }
    return canon;
}

namespace {

const char* kind_name(const CohomologyValue& v) {
    switch (v.kind) {
        case CohomologyValue::Kind::exact:
            return v.with_symbolic() ? "with_symbolic" : "exact";
        case CohomologyValue::Kind::filtration: return "filtration";
        case CohomologyValue::Kind::undetermined: return "undetermined";
    }
    return "?";
}

ordered_json order_json(const std::optional<zlin::Int>& o) {
    if (!o) return nullptr;
    std::ostringstream os;
    os << *o;
    return os.str();
}

}  // namespace

ordered_json value_record(const CohomologyValue& v) {
    ordered_json rec;
    rec["degree"] = v.degree;
    rec["kind"] = kind_name(v);
    rec["value"] = render_value(v);
    if (v.kind == CohomologyValue::Kind::filtration) {
        ordered_json pieces = ordered_json::array();
        for (const auto& p : v.filtration) pieces.push_back(render_piece(p));
        rec["pieces"] = pieces;
    }
    rec["resolved"] = v.resolved();
    rec["order"] = order_json(v.order());
    rec["provenance"] = v.provenance;
    if (!v.criterion.empty()) rec["criterion"] = v.criterion;
    if (!v.reason.empty()) rec["reason"] = v.reason;
    rec["notes"] = v.notes;
    return rec;
}

std::string render_sixterm(const zlin::SixTermSequence& s) {
    static const char* names[6] = {"ker g",     "ker(hg)",   "ker h",
                                   "coker g",   "coker(hg)", "coker h"};
    std::ostringstream os;
    os << "0";
    for (int i = 0; i < 6; ++i)
        os << " -> " << names[i] << " = " << render_group(s.groups[i]);
    os << " -> 0; " << (s.exact ? "exact at every joint" : "NOT exact");
    return os.str();
}

std::string render_crosscheck(const CrosscheckReport& r) {
    std::ostringstream os;
    os << "direct route:   H^2 = " << render_value(r.direct) << "   [" << r.direct.provenance
       << "]\n";
    os << "banding route:  H^2 = " << render_value(r.gerbe_side) << "   ["
       << r.gerbe_side.provenance << "]\n";
    if (r.direct_audit) os << "audit: " << render_sixterm(*r.direct_audit) << "\n";
    os << "stabilizers: " << (r.abelian_stabilizers ? "abelian" : "nonabelian") << "\n";
    os << "verdict: ";
    switch (r.verdict) {
        case CrosscheckReport::Verdict::equal: os << "equal"; break;
        case CrosscheckReport::Verdict::unequal: os << "unequal"; break;
        case CrosscheckReport::Verdict::incomparable: os << "incomparable"; break;
    }
    os << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

ordered_json crosscheck_record(const CrosscheckReport& r) {
    ordered_json rec;
    rec["direct"] = value_record(r.direct);
    rec["banding"] = value_record(r.gerbe_side);
    if (r.direct_audit) {
        ordered_json groups = ordered_json::array();
        for (const auto& g : r.direct_audit->groups) groups.push_back(render_group(g));
        rec["audit_groups"] = groups;
        rec["audit_exact"] = r.direct_audit->exact;
    }
    rec["abelian_stabilizers"] = r.abelian_stabilizers;
    switch (r.verdict) {
        case CrosscheckReport::Verdict::equal: rec["verdict"] = "equal"; break;
        case CrosscheckReport::Verdict::unequal: rec["verdict"] = "unequal"; break;
        case CrosscheckReport::Verdict::incomparable: rec["verdict"] = "incomparable"; break;
    }
    rec["notes"] = r.notes;
    return rec;
}

}  // namespace cli
