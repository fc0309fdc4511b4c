#pragma once

#include <string>
#include <vector>

// Invariant suites runnable from the command line. Each suite exercises one
// module-level property; selftest exits nonzero if any suite fails.

namespace sliceforge::selfcheck {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<SuiteResult> run_all();

}  // namespace sliceforge::selfcheck
