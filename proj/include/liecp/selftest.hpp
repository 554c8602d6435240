#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liecp {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // brief stats on success, explanation on failure
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0: no time bound
};

struct SelftestOptions {
    /// Path of the frozen audit report; when empty the byte-for-byte
    /// comparison inside criterion 6 is skipped (the structural checks
    /// still run).
    std::string golden_path;
};

/// Runs the nine acceptance criteria in order and returns one result each.
/// Each criterion is exact-arithmetic; the ones with pinned time budgets
/// (1: 10 s, 2: 60 s, 5: 5 s, 7: 5 s) also fail when they run over.
std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts = {});

/// Prints one line per criterion ("criterion N: PASS <name> ...") and
/// returns the number of failures.
int report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace liecp
