// covering.hpp - monochromatic pieces, coverings, and the covering validator
#ifndef FEWCOL_COVERING_HPP
#define FEWCOL_COVERING_HPP

#include "fewcol/graph.hpp"
#include "fewcol/vertex_set.hpp"

#include <set>
#include <string>
#include <vector>

namespace fewcol {

// One monochromatic path in the host graph, or a bare vertex. A piece with a
// single vertex carries kNoColour; a longer piece carries the colour shared
// by all of its edges.
struct MonoPiece {
    std::vector<int> vertices;
    int colour = kNoColour;

    static MonoPiece singleton(int v) { return {{v}, kNoColour}; }
    static MonoPiece path(std::vector<int> vs, int colour) { return {std::move(vs), colour}; }

    bool operator==(const MonoPiece&) const = default;
};

struct Covering {
    std::vector<MonoPiece> pieces;

    // Number of distinct colours among pieces that have at least one edge.
    int colours_used() const {
        std::set<int> cs;
        for (const MonoPiece& p : pieces)
            if (p.vertices.size() >= 2) cs.insert(p.colour);
        return int(cs.size());
    }
};

struct CoverReport {
    bool valid = false;
    std::vector<std::pair<int, std::string>> failures; // (piece index, reason)
    std::set<int> colours_used;
    VertexSet uncovered;
};

// Checks every piece against the host graph (path structure, edge colours,
// the colourless-singleton convention), full vertex coverage, and the colour
// budget s. Nothing throws; all problems land in the report.
CoverReport validate_covering(const ColouredGraph& g, const Covering& s, int budget_s);

} // namespace fewcol

#endif // FEWCOL_COVERING_HPP
