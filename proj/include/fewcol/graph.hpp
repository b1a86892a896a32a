// graph.hpp - edge-coloured graph model and bipartite colour statistics
#ifndef FEWCOL_GRAPH_HPP
#define FEWCOL_GRAPH_HPP

#include "fewcol/vertex_set.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace fewcol {

// No edge / no colour marker. Real colours are 1..r.
inline constexpr int kNoColour = 0;

struct Edge {
    int u, v, colour;
    bool operator==(const Edge&) const = default;
};

// An immutable n-vertex graph whose every edge carries one colour in 1..r.
// Vertices are 0..n-1. Backed by a dense colour matrix; an edge exists iff
// its colour entry is nonzero.
class ColouredGraph {
public:
    ColouredGraph() = default;

    int vertex_count() const { return n_; }
    int colour_count() const { return r_; }

    int colour_of(int u, int v) const { return matrix_[std::size_t(u) * n_ + v]; }
    bool adjacent(int u, int v) const { return colour_of(u, v) != kNoColour; }

    std::int64_t edge_count() const { return edge_count_; }

    // Edges as (u, v, colour) with u < v, ascending.
    std::vector<Edge> edges() const;

    // Row of the colour matrix; entry v is colour_of(u, v).
    const std::uint8_t* row(int u) const { return matrix_.data() + std::size_t(u) * n_; }

private:
    friend class GraphBuilder;
    int n_ = 0;
    int r_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<std::uint8_t> matrix_;
};

// Accumulates edges with full validation, then freezes into a ColouredGraph.
class GraphBuilder {
public:
    GraphBuilder(int n, int r);

    // Throws std::invalid_argument on self-loops, out-of-range endpoints or
    // colours, and duplicate edges whose colours disagree.
    void add_edge(int u, int v, int colour);

    ColouredGraph build() &&;

private:
    ColouredGraph g_;
};

// Constructs the graph with exactly the given edge set and colouring.
ColouredGraph build_graph(int n, int r, const std::vector<Edge>& edges);

// Edge counts between disjoint vertex sets A and B, keyed by colour; colours
// with no A-B edge are absent. Throws if A and B overlap.
std::map<int, std::int64_t> colour_profile(const ColouredGraph& g, const VertexSet& a,
                                           const VertexSet& b);

// Same counts as a dense vector indexed by colour (index 0 unused).
std::vector<std::int64_t> colour_profile_dense(const ColouredGraph& g,
                                               const std::vector<int>& a,
                                               const std::vector<int>& b);

} // namespace fewcol

#endif // FEWCOL_GRAPH_HPP
