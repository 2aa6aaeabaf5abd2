#pragma once
// End-to-end verification battery: nine numbered criteria covering group
// construction, curve arithmetic, spectrum enumeration, and bounds.  Each
// criterion reports one pass/fail line; the last one (L-polynomial 2-rank of
// the genus-7 Kummer curve) is informative and never blocks the suite.

#include <string>
#include <vector>

namespace pzero {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    bool blocking = true;  // non-blocking results do not affect the outcome
    std::string detail;
};

// Suites: "groups" runs 1, 2, 8; "curves" runs 3, 4; "spectrum" runs 5, 6, 7;
// "all" runs everything including the non-blocking 9.  With quick set, the
// n = 32 groups and the SU(3) vector actions are skipped.  Throws
// std::invalid_argument for an unknown suite name.
std::vector<CriterionResult> run_verification(const std::string& suite, bool quick);

// True when every blocking criterion in the list passed.
bool all_blocking_passed(const std::vector<CriterionResult>& results);

}  // namespace pzero
