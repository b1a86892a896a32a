// properties.hpp - randomized invariant suites shared by the unit tests, the
// standalone property runner, and the acceptance suite
#ifndef FEWCOL_TESTS_PROPERTIES_HPP
#define FEWCOL_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <string>

namespace fewcol::props {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return cases > 0 && failures == 0; }
};

// Adding pieces to a covering never grows any exclusive cover set.
SuiteResult exclusive_monotonicity(int cases, std::uint64_t seed);

// After a removable batch, each side's exclusive set loses everything the
// batch's foreign-coloured pieces touched.
SuiteResult removability_contract(int cases, std::uint64_t seed);

// Every batch strictly lowers the potential.
SuiteResult delta_strict_decrease(int cases, std::uint64_t seed);

// Filtering a colour set with an empty exclusive set keeps full coverage and
// respects the colour budget.
SuiteResult filter_preserves_coverage(int cases, std::uint64_t seed);

} // namespace fewcol::props

#endif // FEWCOL_TESTS_PROPERTIES_HPP
