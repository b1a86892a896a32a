#include "fewcol/graph.hpp"

#include <stdexcept>
#include <string>

namespace fewcol {

namespace {
// n*n bytes of colour matrix; keeps worst-case allocations near 256 MiB.
constexpr int kMaxVertices = 16384;
} // namespace

std::vector<Edge> ColouredGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(std::size_t(edge_count_));
    for (int u = 0; u < n_; ++u) {
        const std::uint8_t* ru = row(u);
        for (int v = u + 1; v < n_; ++v) {
            if (ru[v] != kNoColour) out.push_back({u, v, ru[v]});
        }
    }
    return out;
}

GraphBuilder::GraphBuilder(int n, int r) {
    if (n < 0) throw std::invalid_argument("graph: vertex count must be nonnegative");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph: vertex count " + std::to_string(n) +
                                    " exceeds supported maximum " + std::to_string(kMaxVertices));
    if (r < 1 || r > 255)
        throw std::invalid_argument("graph: colour count must be in 1..255");
    g_.n_ = n;
    g_.r_ = r;
    g_.matrix_.assign(std::size_t(n) * n, 0);
}

void GraphBuilder::add_edge(int u, int v, int colour) {
    const int n = g_.n_;
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("graph: edge endpoint out of range: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (colour < 1 || colour > g_.r_)
        throw std::invalid_argument("graph: colour " + std::to_string(colour) +
                                    " outside 1.." + std::to_string(g_.r_));
    std::uint8_t& slot = g_.matrix_[std::size_t(u) * n + v];
    if (slot != kNoColour && slot != colour)
        throw std::invalid_argument("graph: conflicting colours for edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + "): " + std::to_string(int(slot)) +
                                    " vs " + std::to_string(colour));
    if (slot == kNoColour) {
        slot = std::uint8_t(colour);
        g_.matrix_[std::size_t(v) * n + u] = std::uint8_t(colour);
        ++g_.edge_count_;
    }
}

ColouredGraph GraphBuilder::build() && { return std::move(g_); }

ColouredGraph build_graph(int n, int r, const std::vector<Edge>& edges) {
    GraphBuilder b(n, r);
    for (const Edge& e : edges) b.add_edge(e.u, e.v, e.colour);
    return std::move(b).build();
}

std::vector<std::int64_t> colour_profile_dense(const ColouredGraph& g,
                                               const std::vector<int>& a,
                                               const std::vector<int>& b) {
    std::vector<std::int64_t> counts(std::size_t(g.colour_count()) + 1, 0);
    for (int u : a) {
        const std::uint8_t* ru = g.row(u);
        for (int v : b) counts[ru[v]] += (ru[v] != kNoColour);
    }
    return counts;
}

std::map<int, std::int64_t> colour_profile(const ColouredGraph& g, const VertexSet& a,
                                           const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("colour_profile: sets overlap");
    auto counts = colour_profile_dense(g, a.to_vector(), b.to_vector());
    std::map<int, std::int64_t> out;
    for (int c = 1; c <= g.colour_count(); ++c)
        if (counts[c] > 0) out[c] = counts[c];
    return out;
}

} // namespace fewcol
