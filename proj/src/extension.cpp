#include "stackcoh/extension.hpp"

#include <sstream>

namespace zlin {

std::string to_string(const SymbolicSummand& s) {
    std::ostringstream os;
    switch (s.kind) {
        case SymbolicSummand::Kind::field_units: os << "k*"; break;
        case SymbolicSummand::Kind::picard_zero: os << "Pic0(g=" << s.genus << ")"; break;
        case SymbolicSummand::Kind::coarse_picard: os << "Pic(C)"; break;
    }
    return os.str();
}

std::string to_string(const GradedPiece& p) {
    if (p.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : p.symbolic) {
        if (!first) os << " + ";
        os << to_string(s);
        first = false;
    }
    if (!p.discrete.is_trivial() || first) {
        if (!first) os << " + ";
        os << to_string(p.discrete);
    }
    return os.str();
}

GradedPiece piece_direct_sum(const GradedPiece& a, const GradedPiece& b) {
    GradedPiece r;
    r.symbolic = a.symbolic;
    for (const auto& s : b.symbolic) r.symbolic.push_back(s);
    r.discrete = direct_sum(a.discrete, b.discrete);
    return r;
}

namespace {

std::optional<Int> filtration_order(const std::vector<GradedPiece>& pieces) {
    Int o = 1;
    for (const auto& p : pieces) {
        auto po = p.order();
        if (!po) return std::nullopt;
        o *= *po;
    }
    return o;
}

}  // namespace

ExtensionResult resolve_extension(const GradedPiece& sub, const GradedPiece& quot) {
    ExtensionResult r;
    r.filtration = {sub, quot};
    r.order = filtration_order(r.filtration);

    auto resolve = [&](const char* why) {
        r.resolved = true;
        r.criterion = why;
        r.group = piece_direct_sum(sub, quot);
    };

    if (sub.is_trivial())
        resolve("trivial_sub");
    else if (quot.is_trivial())
        resolve("trivial_quot");
    else if (quot.is_exact() && quot.discrete.invariant_factors.empty())
        resolve("free_quotient");
    else if (sub.fully_divisible())
        resolve("divisible_sub");
    else if (sub.order() && quot.order() && gcd(*sub.order(), *quot.order()) == 1)
        resolve("coprime_orders");
    else
        r.criterion = "none";
    return r;
}

ExtensionResult resolve_filtration(const std::vector<GradedPiece>& pieces) {
    std::vector<GradedPiece> reported;
    for (const auto& p : pieces)
        if (!p.is_trivial()) reported.push_back(p);

    ExtensionResult r;
    if (reported.empty()) {
        r.resolved = true;
        r.group = GradedPiece::exact(AbelianGroup::trivial());
        r.filtration = {};
        r.order = Int(1);
        r.criterion = "trivial";
        return r;
    }
    r.filtration = reported;
    r.order = filtration_order(reported);

    GradedPiece acc = reported[0];
    std::string why = reported.size() == 1 ? "single_piece" : "";
    bool ok = true;
    for (std::size_t i = 1; i < reported.size(); ++i) {
        ExtensionResult step = resolve_extension(acc, reported[i]);
        if (!step.resolved) {
            ok = false;
            break;
        }
        acc = step.group;
        if (!why.empty()) why += ",";
        why += step.criterion;
    }
    if (ok) {
        r.resolved = true;
        r.group = acc;
        r.criterion = why;
    } else {
        r.criterion = "none";
    }
    return r;
}

}  // namespace zlin
