#pragma once

#include <sstream>
#include <stdexcept>

#include "stackcoh/common.hpp"

namespace gcoh {

struct BudgetExceeded : std::runtime_error {
    zlin::Int size, limit;
    BudgetExceeded(const char* what_op, zlin::Int size_, zlin::Int limit_)
        : std::runtime_error(format(what_op, size_, limit_)),
          size(std::move(size_)),
          limit(std::move(limit_)) {}

    static std::string format(const char* op, const zlin::Int& s, const zlin::Int& l) {
        std::ostringstream os;
        os << op << ": instance size " << s << " exceeds budget " << l;
        return os.str();
    }
};

// Cochain-level work caps. max_oracle_cells bounds |G|^r for the cohomology
// oracle, max_explicit_cells bounds (|G|-1)^{r+1} when explicit cocycle
// representatives are required. Both can be raised through the environment.
struct BarBudget {
    zlin::Int max_oracle_cells = 4096;
    zlin::Int max_explicit_cells = 6000;

    static BarBudget from_env();  // STACKCOH_BAR_BUDGET, STACKCOH_EXPLICIT_BUDGET
};

}  // namespace gcoh
