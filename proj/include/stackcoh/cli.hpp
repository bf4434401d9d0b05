#pragma once

#include <string>
#include <vector>

namespace cli {

// Exit codes: 0 success, 1 validation problems, 2 budget exhaustion,
// 64 usage errors.
struct RunResult {
    int exit_code = 0;
    std::string out, err;
};

RunResult run(const std::vector<std::string>& args);

}  // namespace cli
