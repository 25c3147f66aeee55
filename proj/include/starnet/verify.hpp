#pragma once

#include <string>
#include <vector>

namespace starnet {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> details;  // one line per sub-check, prefixed ok/FAIL
    double seconds = 0.0;
};

struct VerifyOptions {
    // Empty runs everything; otherwise a check name such as "capacity" or its number.
    std::string only;
    // Added to the first central-party angle in the optimum check (negative control).
    double perturb_angle = 0.0;
    unsigned long long seed = 20240601ULL;
};

/// Names of all checks in execution order.
std::vector<std::string> check_names();

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace starnet
