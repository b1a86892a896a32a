// Standalone runner for the randomized invariant suites.
#include "properties.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    const int cases = argc > 1 ? std::atoi(argv[1]) : 1000;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20240811ull;

    using namespace fewcol::props;
    const SuiteResult suites[] = {
        exclusive_monotonicity(cases, seed),
        removability_contract(cases, seed + 1),
        delta_strict_decrease(cases, seed + 2),
        filter_preserves_coverage(cases, seed + 3),
    };

    bool all_ok = true;
    for (const SuiteResult& res : suites) {
        std::printf("[%s] %s: %d cases, %d failures%s%s\n", res.ok() ? "PASS" : "FAIL",
                    res.name.c_str(), res.cases, res.failures,
                    res.first_failure.empty() ? "" : " - ", res.first_failure.c_str());
        all_ok = all_ok && res.ok();
    }
    return all_ok ? 0 : 1;
}
