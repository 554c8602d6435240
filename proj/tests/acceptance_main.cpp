// Acceptance harness: runs the nine acceptance criteria and prints one
// PASS/FAIL line per criterion. Exits nonzero when any criterion fails.
//
// usage: acceptance [--golden PATH]

#include <cstring>
#include <iostream>

#include "liecp/selftest.hpp"

int main(int argc, char** argv) {
    liecp::SelftestOptions opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--golden") == 0 && i + 1 < argc) {
            opts.golden_path = argv[++i];
        } else {
            std::cerr << "usage: " << argv[0] << " [--golden PATH]\n";
            return 2;
        }
    }
    const int failures = liecp::report(std::cout, liecp::run_acceptance(opts));
    return failures > 0 ? 1 : 0;
}
