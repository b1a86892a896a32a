// test_support.hpp - brute-force oracles and small generators for the tests
#ifndef FEWCOL_TESTS_TEST_SUPPORT_HPP
#define FEWCOL_TESTS_TEST_SUPPORT_HPP

#include "fewcol/graph.hpp"
#include "fewcol/johnson.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fewcol::testsupport {

// Exhaustive maximum independent set, n <= 20 or so.
inline int brute_independence(const ColouredGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) adj[u] |= std::uint32_t(1) << v;
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        bool independent = true;
        for (std::uint32_t m = mask; m && independent; m &= m - 1)
            independent = (adj[__builtin_ctz(m)] & mask) == 0;
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline int brute_independence(const SimpleGraph& g) {
    const int n = g.n;
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) adj[u] |= std::uint32_t(1) << v;
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        bool independent = true;
        for (std::uint32_t m = mask; m && independent; m &= m - 1)
            independent = (adj[__builtin_ctz(m)] & mask) == 0;
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// Random r-coloured graph with independent edge probability p.
inline ColouredGraph random_graph(int n, int r, double p, std::mt19937_64& rng) {
    GraphBuilder b(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p)
                b.add_edge(u, v, int(rng() % r) + 1);
    return std::move(b).build();
}

// All vertex sets of simple monochromatic paths in the given colour, found
// by plain DFS over vertex sequences (no memoization; independent of the
// catalogue implementation). n <= 8 or so.
inline void brute_path_masks_dfs(const ColouredGraph& g, int colour, int last,
                                 std::uint32_t mask, std::vector<char>& out) {
    out[mask] = 1;
    for (int w = 0; w < g.vertex_count(); ++w)
        if (!((mask >> w) & 1) && g.colour_of(last, w) == colour)
            brute_path_masks_dfs(g, colour, w, mask | (std::uint32_t(1) << w), out);
}

inline std::vector<char> brute_path_masks(const ColouredGraph& g, int colour) {
    std::vector<char> out(std::size_t(1) << g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        brute_path_masks_dfs(g, colour, v, std::uint32_t(1) << v, out);
    return out;
}

} // namespace fewcol::testsupport

#endif // FEWCOL_TESTS_TEST_SUPPORT_HPP
