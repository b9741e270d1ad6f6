// Acceptance suite runner: one pass/fail line per criterion, nonzero exit on
// any failure.
#include <cstdio>
#include <cstdlib>

#include "sfp/validation.hpp"

int main() {
    int threads = 2;
    if (const char* env = std::getenv("SFP_THREADS")) threads = std::atoi(env);
    const auto results = sfp::validation::run_acceptance(threads);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s  %-24s (%.1f s)  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.runtime_s, r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
