// Acceptance suite: one pass/fail line per criterion, details for failures.
//   starnet_acceptance [--only NAME] [--verbose]

#include <cstring>
#include <iostream>
#include <string>

#include "starnet/verify.hpp"

int main(int argc, char** argv) {
    starnet::VerifyOptions opts;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            opts.only = argv[++i];
        } else if (std::strcmp(argv[i], "--verbose") == 0) {
            verbose = true;
        } else {
            std::cerr << "usage: " << argv[0] << " [--only NAME] [--verbose]\n";
            return 2;
        }
    }

    bool all = true;
    for (const auto& r : starnet::run_verification(opts)) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << " (" << r.name << ")  "
                  << r.seconds << "s\n";
        for (const auto& d : r.details) {
            if (verbose || d.rfind("FAIL", 0) == 0) std::cout << "      " << d << "\n";
        }
    }
    return all ? 0 : 1;
}
