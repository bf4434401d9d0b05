#pragma once

#include <json.hpp>

#include "stackcoh/pipelines.hpp"

namespace cli {

// Canonical rendering: "Z^r + Z/d1 + Z/d2" with invariant-factor order,
// "0" for the trivial group; symbolic summands render as "k*", "Pic0(g=..)"
// and "Pic(C)".
std::string render_group(const zlin::AbelianGroup& g);
std::string render_piece(const zlin::GradedPiece& p);
std::string render_value(const stackcurve::CohomologyValue& v);

// Inverse of render_group for exact values.
zlin::AbelianGroup parse_group_string(const std::string& s);

// Stable machine-readable record for one degree.
nlohmann::ordered_json value_record(const stackcurve::CohomologyValue& v);

std::string render_sixterm(const zlin::SixTermSequence& s);
std::string render_crosscheck(const stackcurve::CrosscheckReport& r);
nlohmann::ordered_json crosscheck_record(const stackcurve::CrosscheckReport& r);

}  // namespace cli
