#pragma once

#include <string>
#include <vector>

#include "stackcoh/pipelines.hpp"

namespace cli {

struct CheckResult {
    std::string name;
    enum class Status { pass, fail, flagged } status = Status::pass;
    std::string detail;
};

// Named verification checks grouped into suites: zlin, gcoh, stackcurve,
// crosschecks, or all. Crosscheck disagreements come back as `flagged`,
// never as failures.
std::vector<CheckResult> verify_suite(const std::string& suite,
                                      const gcoh::BarBudget& budget = gcoh::BarBudget::from_env());

bool suite_failed(const std::vector<CheckResult>& results);

// Shared fixtures (the worked examples the suites and the acceptance tests
// exercise).
namespace fixtures {

// projective genus-0 orbicurve with two points of orders 2 and 3
stackcurve::CurveDescriptor orbicurve_p23();
// affine line with one point of order p, trivial generic stabilizer
stackcurve::CurveDescriptor affine_one_point(long p);
// the order-p^2 quotient of the affine line: generic stabilizer Z/p, one
// stacky point of order p, cyclic tower
stackcurve::CurveDescriptor tower(long p);
// affine line under the dihedral group of order 2m (m odd): generic
// stabilizer Z/m, one stacky point of order 2 with the dihedral table
stackcurve::CurveDescriptor dihedral(long m);
// nodal projective curve with one stacky node of order 3 and one smooth
// stacky point of order 2
stackcurve::CurveDescriptor nodal_mixed();
// projective genus-g curve with no stacky points and cyclic generic
// stabilizer of order d, trivial product gerbe
stackcurve::CurveDescriptor projective_gerbe(long genus, long d);

}  // namespace fixtures

}  // namespace cli
