// numeric.hpp - small exact-integer helpers shared across modules
#ifndef FEWCOL_NUMERIC_HPP
#define FEWCOL_NUMERIC_HPP

#include <cstdint>

namespace fewcol {

std::int64_t binomial(int n, int k);

// Exact comparison a^p > b^q for nonnegative bases, 128-bit with saturation.
bool pow_exceeds(std::int64_t a, int p, std::int64_t b, int q);

// Largest x with x^den <= n^num, i.e. floor(n^(num/den)).
std::int64_t floor_frac_pow(std::int64_t n, int num, int den);

} // namespace fewcol

#endif // FEWCOL_NUMERIC_HPP
