#pragma once

#include <string>
#include <vector>

#include "stackcoh/curve.hpp"

namespace cli {

// Parse a descriptor from JSON text. Schema problems are collected, not
// truncated at the first failure; unknown keys are rejected; integers must
// be exact.
struct ParsedDescriptor {
    stackcurve::CurveDescriptor descriptor;
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

ParsedDescriptor parse_descriptor_json(const std::string& text);

// Load and fully validate; throws stackcurve::ValidationError with the full
// diagnostic list.
stackcurve::CurveDescriptor load_descriptor(const std::string& path);

}  // namespace cli
