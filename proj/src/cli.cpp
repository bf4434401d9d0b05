#include "stackcoh/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "stackcoh/closed_forms.hpp"
#include "stackcoh/descriptor_json.hpp"
#include "stackcoh/periodic.hpp"
#include "stackcoh/render.hpp"
#include "stackcoh/verify.hpp"

namespace cli {

using gcoh::FiniteGroup;
using gcoh::ModuleDescriptor;
using nlohmann::ordered_json;
using stackcurve::CohomologyValue;
using zlin::AbelianGroup;
using zlin::Int;

namespace {

// "Z6", "Z/6", "Z2xZ4", "D10", "1", "trivial"
FiniteGroup parse_group_spec(const std::string& spec) {
    if (spec == "1" || spec == "trivial") return FiniteGroup::trivial();
    if (spec.size() >= 2 && spec[0] == 'D') {
        long n = std::stol(spec.substr(1));
        return FiniteGroup::dihedral(static_cast<int>(n));
    }
    std::vector<Int> factors;
    std::size_t i = 0;
    while (i < spec.size()) {
        if (spec[i] != 'Z') throw std::invalid_argument("bad group spec '" + spec + "'");
        ++i;
        if (i < spec.size() && spec[i] == '/') ++i;
        std::size_t start = i;
        while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
        if (start == i) throw std::invalid_argument("bad group spec '" + spec + "'");
        factors.push_back(Int(spec.substr(start, i - start)));
        if (i < spec.size()) {
            if (spec[i] != 'x') throw std::invalid_argument("bad group spec '" + spec + "'");
            ++i;
        }
    }
    if (factors.empty()) throw std::invalid_argument("bad group spec '" + spec + "'");
    return FiniteGroup::abelian(factors);
}

// "Z", "Z^2", "Z/4", "Z^1+Z/2", "k*", "Pic0(g=2)"
ModuleDescriptor parse_coeff_spec(const std::string& spec, long characteristic) {
    if (spec == "k*" || spec == "units") return ModuleDescriptor::units(characteristic);
    if (spec.rfind("Pic0(g=", 0) == 0 && spec.back() == ')') {
        long g = std::stol(spec.substr(7, spec.size() - 8));
        return ModuleDescriptor::picard0(g, characteristic);
    }
    return ModuleDescriptor::fg(parse_group_string(spec));
}

std::string group_value_text(const gcoh::GroupValue& v) {
    return zlin::to_string(v.value) + "   [" + gcoh::to_string(v.provenance) + "]";
}

ordered_json group_value_record(const gcoh::GroupValue& v, int degree) {
    ordered_json rec;
    rec["degree"] = degree;
    rec["value"] = zlin::to_string(v.value);
    rec["provenance"] = gcoh::to_string(v.provenance);
    return rec;
}

int run_groupcoh(const std::string& group_spec, const std::string& coeff_spec, int degree,
                 bool oracle, long characteristic, const std::string& format, std::ostream& out,
                 const gcoh::BarBudget& budget) {
    FiniteGroup g = parse_group_spec(group_spec);
    ModuleDescriptor coeff = parse_coeff_spec(coeff_spec, characteristic);

    gcoh::GroupValue v;
    if (oracle) {
        if (coeff.symbolic())
            throw std::invalid_argument("the oracle needs finitely generated coefficients");
        v = gcoh::bar_cohomology(g, coeff.group, degree, budget);
    } else if (g.kind() == FiniteGroup::Kind::cyclic) {
        v = gcoh::cyclic_cohomology(g.order(), coeff, degree);
    } else if (g.is_abelian() && !coeff.symbolic()) {
        v = {zlin::GradedPiece::exact(
                 gcoh::periodic_cohomology(g.invariant_factors(), coeff.group, degree)),
             gcoh::Provenance::periodic_resolution};
    } else if (g.is_abelian() && coeff.symbolic()) {
        if (degree == 0)
            v = {coeff.as_piece(), gcoh::Provenance::closed_form};
        else
            v = gcoh::divisible_cohomology(g, coeff, degree);
    } else {
        if (coeff.symbolic())
            throw std::invalid_argument(
                "symbolic coefficients over table groups need --oracle-free closed forms "
                "that only exist for abelian groups");
        v = gcoh::bar_cohomology(g, coeff.group, degree, budget);
    }
    if (format == "json")
        out << group_value_record(v, degree).dump(2) << "\n";
    else
        out << "H^" << degree << " = " << group_value_text(v) << "\n";
    return 0;
}

void print_value_text(const CohomologyValue& v, std::ostream& out) {
    out << "H^" << v.degree << " = " << render_value(v) << "   [" << v.provenance << "]";
    if (auto o = v.order()) out << "  order " << *o;
    out << "\n";
    for (const auto& n : v.notes) out << "    note: " << n << "\n";
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult result;
    std::ostringstream out, err;

    CLI::App app{"calculator for unit-sheaf cohomology of tame stacky curves"};
    app.require_subcommand(1);

    gcoh::BarBudget budget = gcoh::BarBudget::from_env();

    // cohom
    std::string cohom_input, cohom_format = "text";
    int cohom_maxdeg = 5;
    CLI::App* cohom = app.add_subcommand("cohom", "cohomology of a descriptor over a degree range");
    cohom->add_option("--input", cohom_input, "descriptor JSON file")->required();
    cohom->add_option("--max-degree", cohom_maxdeg, "highest degree to compute");
    cohom->add_option("--format", cohom_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // picard
    std::string picard_input, picard_format = "text";
    CLI::App* picard = app.add_subcommand("picard", "Picard group of the underlying orbicurve");
    picard->add_option("--input", picard_input, "descriptor JSON file")->required();
    picard->add_option("--format", picard_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // groupcoh
    std::string gc_group, gc_coeff = "Z", gc_format = "text";
    int gc_degree = 2;
    long gc_char = 0;
    bool gc_oracle = false;
    CLI::App* groupcoh = app.add_subcommand("groupcoh", "finite group cohomology, trivial action");
    groupcoh->add_option("--group", gc_group, "group spec: Z6, Z2xZ4, D10, trivial")->required();
    groupcoh->add_option("--coeff", gc_coeff, "coefficients: Z, Z^2, Z/4, Z^1+Z/2, k*, Pic0(g=2)");
    groupcoh->add_option("--degree", gc_degree, "cohomological degree")->required();
    groupcoh->add_flag("--oracle", gc_oracle, "force the bar-resolution oracle");
    groupcoh->add_option("--characteristic", gc_char, "base-field characteristic for k*/Pic0");
    groupcoh->add_option("--format", gc_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // kummer
    std::string kummer_input, kummer_format = "text";
    long kummer_n = 1;
    CLI::App* kummer = app.add_subcommand("kummer", "H^2 with mu_n coefficients via Pic/n");
    kummer->add_option("--input", kummer_input, "descriptor JSON file")->required();
    kummer->add_option("--n", kummer_n, "root order")->required();
    kummer->add_option("--format", kummer_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // crosscheck
    std::string cross_input, cross_format = "text";
    CLI::App* cross = app.add_subcommand("crosscheck", "degree-2 comparison of both routes");
    cross->add_option("--input", cross_input, "descriptor JSON file")->required();
    cross->add_option("--format", cross_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    std::string verify_which = "all";
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_which, "all | zlin | gcoh | stackcurve | crosschecks");

    std::vector<const char*> argv;
    argv.push_back("stackcoh");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        result.exit_code = 0;
        result.out = out.str();
        return result;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        result.exit_code = 64;
        result.err = err.str();
        return result;
    }

    try {
        if (*cohom) {
            stackcurve::CurveDescriptor d = load_descriptor(cohom_input);
            if (cohom_format == "json") {
                ordered_json arr = ordered_json::array();
                for (int r = 0; r <= cohom_maxdeg; ++r)
                    arr.push_back(value_record(stackcurve::cohomology(d, r, budget)));
                out << arr.dump(2) << "\n";
            } else {
                for (int r = 0; r <= cohom_maxdeg; ++r)
                    print_value_text(stackcurve::cohomology(d, r, budget), out);
            }
        } else if (*picard) {
            stackcurve::CurveDescriptor d = load_descriptor(picard_input);
            if (d.nodal()) {
                CohomologyValue v = stackcurve::cohomology_twisted_nodal(d, 1);
                if (picard_format == "json")
                    out << value_record(v).dump(2) << "\n";
                else
                    print_value_text(v, out);
            } else {
                stackcurve::PicardValue pic = stackcurve::picard_orbicurve(d);
                if (picard_format == "json") {
                    ordered_json rec;
                    rec["value"] = render_piece(pic.as_piece());
                    rec["discrete_part"] = render_group(pic.discrete_part);
                    rec["provenance"] = pic.provenance;
                    out << rec.dump(2) << "\n";
                } else {
                    out << "Pic = " << render_piece(pic.as_piece()) << "   [" << pic.provenance
                        << "]\n";
                }
            }
        } else if (*groupcoh) {
            run_groupcoh(gc_group, gc_coeff, gc_degree, gc_oracle, gc_char, gc_format, out,
                         budget);
        } else if (*kummer) {
            stackcurve::CurveDescriptor d = load_descriptor(kummer_input);
            AbelianGroup g = stackcurve::kummer_h2(d, Int(kummer_n));
            if (kummer_format == "json") {
                ordered_json rec;
                rec["n"] = kummer_n;
                rec["value"] = render_group(g);
                out << rec.dump(2) << "\n";
            } else {
                out << "H^2(Y, mu_" << kummer_n << ") = " << render_group(g) << "\n";
            }
        } else if (*cross) {
            stackcurve::CurveDescriptor d = load_descriptor(cross_input);
            stackcurve::CrosscheckReport rep = stackcurve::h2_abelian_crosscheck(d, budget);
            if (cross_format == "json")
                out << crosscheck_record(rep).dump(2) << "\n";
            else
                out << render_crosscheck(rep);
        } else if (*verify) {
            std::vector<CheckResult> results = verify_suite(verify_which, budget);
            for (const auto& r : results) {
                const char* tag = r.status == CheckResult::Status::pass      ? "PASS   "
                                  : r.status == CheckResult::Status::flagged ? "FLAGGED"
                                                                             : "FAIL   ";
                out << tag << " " << r.name;
                if (!r.detail.empty()) out << "  --  " << r.detail;
                out << "\n";
            }
            if (suite_failed(results)) result.exit_code = 1;
        }
    } catch (const stackcurve::ValidationError& e) {
        err << e.what() << "\n";
        result.exit_code = 1;
    } catch (const gcoh::BudgetExceeded& e) {
        err << e.what() << "\n";
        result.exit_code = 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        result.exit_code = 1;
    }

    result.out = out.str();
    result.err = err.str();
    return result;
}

}  // namespace cli
