// Acceptance battery: one pass/fail line per numbered criterion.  Blocking
// criteria fail the binary; the final L-polynomial criterion is informative.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "pzero/verify.hpp"

TEST_CASE("acceptance battery") {
    const auto results = pzero::run_verification("all", false);
    REQUIRE(results.size() == 9);
    for (const auto& r : results) {
        std::printf("[%s] criterion %d: %s -- %s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.title.c_str(), r.detail.c_str(), r.blocking ? "" : " (non-blocking)");
        std::fflush(stdout);
        if (r.blocking) {
            INFO("criterion " << r.id << ": " << r.title << " -- " << r.detail);
            CHECK(r.pass);
        }
    }
    CHECK(pzero::all_blocking_passed(results));
}
