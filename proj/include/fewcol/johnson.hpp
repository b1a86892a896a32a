// johnson.hpp - Johnson graphs J(a,b): b-subsets of [a], adjacent iff the
// subsets intersect
#ifndef FEWCOL_JOHNSON_HPP
#define FEWCOL_JOHNSON_HPP

#include "fewcol/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace fewcol {

struct SimpleGraph {
    int n = 0;
    std::vector<VertexSet> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int vertices) : n(vertices), adj(vertices, VertexSet(vertices)) {}

    void add_edge(int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    bool adjacent(int u, int v) const { return adj[u].contains(v); }
};

struct JohnsonGraph {
    SimpleGraph graph;
    // Vertex labels: b-subset masks of [a] (bit e-1 for element e), ascending,
    // which is colex order on the sorted elements.
    std::vector<std::uint32_t> vertex_sets;
};

// Throws std::invalid_argument unless 1 <= b <= a.
JohnsonGraph johnson(int a, int b);

} // namespace fewcol

#endif // FEWCOL_JOHNSON_HPP
