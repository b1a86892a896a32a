#include "fewcol/covering.hpp"

namespace fewcol {

CoverReport validate_covering(const ColouredGraph& g, const Covering& s, int budget_s) {
    const int n = g.vertex_count();
    CoverReport rep;
    rep.uncovered = VertexSet::full(n);

    for (std::size_t i = 0; i < s.pieces.size(); ++i) {
        const MonoPiece& p = s.pieces[i];
        const int idx = int(i);
        auto fail = [&](const std::string& why) { rep.failures.emplace_back(idx, why); };

        if (p.vertices.empty()) {
            fail("piece has no vertices");
            continue;
        }
        bool range_ok = true;
        for (int v : p.vertices) {
            if (v < 0 || v >= n) {
                fail("vertex " + std::to_string(v) + " out of range");
                range_ok = false;
                break;
            }
        }
        if (!range_ok) continue;

        VertexSet seen(n);
        bool repeated = false;
        for (int v : p.vertices) {
            if (seen.contains(v)) {
                fail("repeated vertex " + std::to_string(v));
                repeated = true;
                break;
            }
            seen.insert(v);
        }
        if (repeated) continue;

        if (p.vertices.size() == 1) {
            if (p.colour != kNoColour)
                fail("single-vertex piece must be colourless");
        } else {
            if (p.colour == kNoColour) {
                fail("multi-vertex piece has no colour");
            } else if (p.colour < 1 || p.colour > g.colour_count()) {
                fail("colour " + std::to_string(p.colour) + " outside 1.." +
                     std::to_string(g.colour_count()));
            } else {
                for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
                    const int u = p.vertices[j], v = p.vertices[j + 1];
                    const int c = g.colour_of(u, v);
                    if (c == kNoColour) {
                        fail("vertices " + std::to_string(u) + "," + std::to_string(v) +
                             " not adjacent");
                        break;
                    }
                    if (c != p.colour) {
                        fail("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has colour " + std::to_string(c) + ", piece declares " +
                             std::to_string(p.colour));
                        break;
                    }
                }
                rep.colours_used.insert(p.colour);
            }
        }
        for (int v : p.vertices) rep.uncovered.erase(v);
    }

    rep.valid = rep.failures.empty() && rep.uncovered.empty() &&
                int(rep.colours_used.size()) <= budget_s;
    return rep;
}

} // namespace fewcol
