// kneser.hpp - Kneser hypergraphs on colour sets, chromatic number by formula
// and by exact search
#ifndef FEWCOL_KNESER_HPP
#define FEWCOL_KNESER_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace fewcol {

// An (r-s)-subset of the colours 1..r, stored as a bitmask with bit c-1 for
// colour c. Ascending mask order is colex order on the sorted elements, which
// is the canonical vertex order everywhere.
struct ColourSet {
    std::uint32_t mask = 0;

    static ColourSet of(const std::vector<int>& colours) {
        ColourSet x;
        for (int c : colours) x.mask |= std::uint32_t(1) << (c - 1);
        return x;
    }

    int size() const { return __builtin_popcount(mask); }
    bool contains(int colour) const { return (mask >> (colour - 1)) & 1; }
    bool disjoint_from(const ColourSet& o) const { return (mask & o.mask) == 0; }
    int min_colour() const { return __builtin_ctz(mask) + 1; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t m = mask; m; m &= m - 1) out.push_back(__builtin_ctz(m) + 1);
        return out;
    }

    bool operator==(const ColourSet&) const = default;
    bool operator<(const ColourSet& o) const { return mask < o.mask; }
};

// The (alpha+1)-uniform hypergraph whose vertices are all (r-s)-subsets of
// [r] and whose hyperedges are the pairwise-disjoint (alpha+1)-tuples.
// It has no hyperedges exactly when (alpha+1)(r-s) > r.
struct KneserHypergraph {
    int r = 0, s = 0, alpha = 0;
    std::vector<ColourSet> vertices;          // ascending mask order
    std::vector<std::vector<int>> hyperedges; // sorted vertex-index tuples, lex order

    int vertex_index(const ColourSet& x) const;
};

// Throws std::invalid_argument unless 1 <= s < r and alpha >= 1.
KneserHypergraph build_kneser(int r, int s, int alpha);

// Chromatic number of KneserHypergraph(r, s, alpha) in closed form:
// 1 when s(alpha+1) < alpha*r, else 1 + s - r + ceil((s+1)/alpha).
int chi_formula(int r, int s, int alpha);

struct ChiExactResult {
    std::optional<int> chi;   // nullopt when the budget ran out
    std::vector<int> witness; // proper colouring per vertex index, 1-based colours
};

// Least c admitting a colouring with no monochromatic hyperedge, found by
// backtracking; colour-class permutations are cut by capping each vertex at
// one more colour than the maximum used so far. The budget counts search
// nodes.
ChiExactResult chi_exact(const KneserHypergraph& kh, std::int64_t budget = 200'000'000);

// A c-colouring with no monochromatic hyperedge, or nullopt if none exists.
// Deterministic for a given (kh, c).
std::optional<std::vector<int>> proper_colouring(const KneserHypergraph& kh, int c);

} // namespace fewcol

#endif // FEWCOL_KNESER_HPP
