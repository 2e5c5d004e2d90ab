// Acceptance gate: every release criterion at its shipped scale, one
// pass/fail line each. Run via ctest or directly; nonzero exit on failure.

#include <cstdio>
#include <cstdlib>

#include "necklace/suite.hpp"

int main() {
    necklace::SuiteConfig cfg;
    if (const char* env = std::getenv("NECKLACE_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);

    std::printf("seed: %llu\n", static_cast<unsigned long long>(cfg.seed));
    auto results = necklace::run_acceptance(cfg);
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s  %-28s (%.2f s)\n", r.pass ? "pass" : "FAIL", r.name.c_str(), r.seconds);
        if (!r.pass) {
            std::printf("      expected: %s\n", r.expected.c_str());
            std::printf("      actual:   %s\n", r.actual.c_str());
            all = false;
        }
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
