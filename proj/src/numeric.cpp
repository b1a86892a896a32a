#include "fewcol/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace fewcol {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

namespace {

using u128 = unsigned __int128;
constexpr u128 kSaturated = u128(1) << 120;

// base^exp, saturating at 2^120.
u128 sat_pow(std::int64_t base, int exp) {
    u128 acc = 1;
    const u128 b = u128(base);
    for (int i = 0; i < exp; ++i) {
        if (b != 0 && acc > kSaturated / b) return kSaturated;
        acc *= b;
        if (acc >= kSaturated) return kSaturated;
    }
    return acc;
}

} // namespace

bool pow_exceeds(std::int64_t a, int p, std::int64_t b, int q) {
    if (a < 0 || b < 0 || p < 0 || q < 0) throw std::invalid_argument("pow_exceeds: negative input");
    const u128 lhs = sat_pow(a, p);
    const u128 rhs = sat_pow(b, q);
    if (lhs < kSaturated || rhs < kSaturated) return lhs > rhs;
    // both beyond 2^120: decide on logarithms, treating near-ties as equal
    const long double ll = p * std::log((long double)a);
    const long double lr = q * std::log((long double)b);
    return ll > lr + 1e-12L;
}

std::int64_t floor_frac_pow(std::int64_t n, int num, int den) {
    if (n < 0 || num < 0 || den <= 0) throw std::invalid_argument("floor_frac_pow: bad arguments");
    if (n == 0) return 0;
    std::int64_t x = (std::int64_t)std::floor(std::pow((double)n, (double)num / den));
    if (x < 1) x = 1;
    while (pow_exceeds(x, den, n, num)) --x;
    while (!pow_exceeds(x + 1, den, n, num)) ++x;
    return x;
}

} // namespace fewcol
