#pragma once

#include <string>
#include <vector>

namespace specsat {

struct CriterionResult {
    std::string id;   // "criterion-01" ...
    std::string name;
    bool ran = false; // long-tier items are skipped in the fast tier
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The paper-verification suite. The fast tier keeps enumeration at n <= 7;
// the long tier adds the n = 8, 9 scans.
std::vector<CriterionResult> run_acceptance(bool long_tier);

std::string acceptance_to_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace specsat
