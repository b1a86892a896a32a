#include "fewcol/independence.hpp"

#include <algorithm>

namespace fewcol {

namespace {

// Tomita-style max clique: candidates are greedily coloured and processed in
// descending colour order so that size + colour(v) <= best prunes the rest.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(const std::vector<VertexSet>& adj, std::int64_t budget)
        : adj_(adj), budget_(budget) {}

    std::optional<int> solve() {
        const int n = int(adj_.size());
        std::vector<int> cand(n);
        for (int v = 0; v < n; ++v) cand[v] = v;
        expand(0, cand);
        if (exceeded_) return std::nullopt;
        return best_;
    }

private:
    void expand(int size, const std::vector<int>& cand) {
        if (exceeded_) return;
        if (--budget_ < 0) {
            exceeded_ = true;
            return;
        }
        if (cand.empty()) {
            best_ = std::max(best_, size);
            return;
        }

        const int n = adj_.empty() ? 0 : adj_[0].universe();
        std::vector<VertexSet> classes;
        std::vector<int> ordered;
        std::vector<int> colour_of;
        ordered.reserve(cand.size());
        colour_of.reserve(cand.size());
        for (int v : cand) {
            std::size_t c = 0;
            while (c < classes.size() && adj_[v].intersects(classes[c])) ++c;
            if (c == classes.size()) classes.emplace_back(n);
            classes[c].insert(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c) {
            classes[c].for_each([&](int v) {
                ordered.push_back(v);
                colour_of.push_back(int(c) + 1);
            });
        }

        for (int i = int(ordered.size()) - 1; i >= 0; --i) {
            if (size + colour_of[i] <= best_) return;
            const int v = ordered[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adj_[v].contains(ordered[j])) next.push_back(ordered[j]);
            expand(size + 1, next);
            if (exceeded_) return;
        }
    }

    const std::vector<VertexSet>& adj_;
    std::int64_t budget_;
    bool exceeded_ = false;
    int best_ = 0;
};

} // namespace

std::optional<int> independence_number(const std::vector<VertexSet>& adjacency,
                                       std::int64_t budget) {
    const int n = int(adjacency.size());
    std::vector<VertexSet> complement(n, VertexSet(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && !adjacency[u].contains(v)) complement[u].insert(v);
    return MaxCliqueSolver(complement, budget).solve();
}

std::optional<int> independence_number(const ColouredGraph& g, std::int64_t budget) {
    const int n = g.vertex_count();
    std::vector<VertexSet> complement(n, VertexSet(n));
    for (int u = 0; u < n; ++u) {
        const std::uint8_t* ru = g.row(u);
        for (int v = 0; v < n; ++v)
            if (u != v && ru[v] == kNoColour) complement[u].insert(v);
    }
    return MaxCliqueSolver(complement, budget).solve();
}

} // namespace fewcol
