// oracle.hpp - exact minimum monochromatic-path covering at bitmask scale
#ifndef FEWCOL_ORACLE_HPP
#define FEWCOL_ORACLE_HPP

#include "fewcol/covering.hpp"
#include "fewcol/graph.hpp"

#include <cstdint>
#include <vector>

namespace fewcol {

// Vertex bitmasks coverable by a single piece whose colour lies in a fixed
// colour set, reduced to the maximal masks (a cover never needs a dominated
// mask). Singleton masks are always available since a bare vertex is a piece.
struct PathCatalogue {
    int n = 0;
    struct Entry {
        std::uint32_t mask = 0;
        int colour = kNoColour; // kNoColour marks a singleton
    };
    std::vector<Entry> entries; // ascending by mask
};

// All vertex sets of simple paths monochromatic in one of the given colours,
// plus singletons, maximal masks only. Requires n <= 16.
PathCatalogue enumerate_mono_paths(const ColouredGraph& g, const std::vector<int>& colours);

struct OracleResult {
    int min_size = 0;
    Covering witness;
};

// Exact minimum size of a covering by monochromatic paths (and bare
// vertices) using at most s distinct colours, over all colour subsets of
// size <= s, by dynamic programming over uncovered-vertex masks. The witness
// reconstructs actual paths. Requires n <= 14.
OracleResult min_cover_exact(const ColouredGraph& g, int s);

} // namespace fewcol

#endif // FEWCOL_ORACLE_HPP
