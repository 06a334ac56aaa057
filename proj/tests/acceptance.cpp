#include "dsrg/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>

int main() {
    dsrg::CatalogOptions opts;
    if (const char* jobs = std::getenv("DSRG_JOBS")) opts.jobs = static_cast<unsigned>(std::max(1, std::atoi(jobs)));
    int gating_failures = 0;
    for (const auto& r : dsrg::run_catalog({}, opts)) {
        std::cout << (r.passed() ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title
                  << (r.gating ? "" : " (non-gating)") << '\n';
        for (const auto& line : r.checks) std::cout << "    " << (line.ok ? "ok   " : "FAIL ") << line.text << '\n';
        if (!r.passed() && r.gating) ++gating_failures;
    }
    return gating_failures == 0 ? 0 : 1;
}
