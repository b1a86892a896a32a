#include "fewcol/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace fewcol {

namespace {

// reach[mask] has bit v set iff some simple path in the colour-c subgraph
// covers exactly mask and ends at v.
std::vector<std::uint32_t> path_reachability(const ColouredGraph& g, int colour) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> reach(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) reach[std::uint32_t(1) << v] = std::uint32_t(1) << v;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        std::uint32_t ends = reach[mask];
        while (ends) {
            const int v = __builtin_ctz(ends);
            ends &= ends - 1;
            const std::uint8_t* row = g.row(v);
            for (int w = 0; w < n; ++w) {
                if (row[w] == colour && !((mask >> w) & 1))
                    reach[mask | (std::uint32_t(1) << w)] |= std::uint32_t(1) << w;
            }
        }
    }
    return reach;
}

// Ordered vertices of a simple path that covers exactly mask in the given
// colour; mask must be realizable.
std::vector<int> realize_path(const ColouredGraph& g, std::uint32_t mask, int colour) {
    std::vector<int> vs;
    for (std::uint32_t m = mask; m; m &= m - 1) vs.push_back(__builtin_ctz(m));
    if (vs.size() == 1) return vs;

    const int k = int(vs.size());
    // local reachability with predecessor tracking
    std::vector<std::vector<int>> prev(std::size_t(1) << k, std::vector<int>(k, -1));
    std::vector<std::uint32_t> reach(std::size_t(1) << k, 0);
    for (int i = 0; i < k; ++i) {
        reach[std::uint32_t(1) << i] = std::uint32_t(1) << i;
        prev[std::uint32_t(1) << i][i] = i; // self marks a start
    }
    for (std::uint32_t sub = 1; sub < (std::uint32_t(1) << k); ++sub) {
        std::uint32_t ends = reach[sub];
        while (ends) {
            const int i = __builtin_ctz(ends);
            ends &= ends - 1;
            for (int j = 0; j < k; ++j) {
                if ((sub >> j) & 1) continue;
                if (g.colour_of(vs[i], vs[j]) != colour) continue;
                const std::uint32_t next = sub | (std::uint32_t(1) << j);
                if (!((reach[next] >> j) & 1)) {
                    reach[next] |= std::uint32_t(1) << j;
                    prev[next][j] = i;
                }
            }
        }
    }
    const std::uint32_t full = (std::uint32_t(1) << k) - 1;
    if (reach[full] == 0) throw std::logic_error("oracle: mask is not path-realizable");
    int end = __builtin_ctz(reach[full]);
    std::vector<int> order;
    std::uint32_t sub = full;
    while (true) {
        order.push_back(vs[end]);
        const int p = prev[sub][end];
        if (p == end) break;
        sub &= ~(std::uint32_t(1) << end);
        end = p;
    }
    std::reverse(order.begin(), order.end());
    return order;
}

std::vector<PathCatalogue::Entry> maximal_filter(std::map<std::uint32_t, int> by_mask) {
    // larger-popcount masks can never be dominated by smaller ones
    std::vector<std::pair<std::uint32_t, int>> masks(by_mask.begin(), by_mask.end());
    std::stable_sort(masks.begin(), masks.end(), [](const auto& a, const auto& b) {
        return __builtin_popcount(a.first) > __builtin_popcount(b.first);
    });
    std::vector<PathCatalogue::Entry> kept;
    for (const auto& [mask, colour] : masks) {
        bool dominated = false;
        for (const auto& e : kept) {
            if (__builtin_popcount(e.mask) == __builtin_popcount(mask)) break;
            if ((mask & ~e.mask) == 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back({mask, colour});
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.mask < b.mask; });
    return kept;
}

} // namespace

PathCatalogue enumerate_mono_paths(const ColouredGraph& g, const std::vector<int>& colours) {
    const int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("enumerate_mono_paths: n > 16");
    for (int c : colours)
        if (c < 1 || c > g.colour_count())
            throw std::invalid_argument("enumerate_mono_paths: colour out of range");

    std::map<std::uint32_t, int> by_mask;
    for (int v = 0; v < n; ++v) by_mask[std::uint32_t(1) << v] = kNoColour;
    std::set<int> distinct(colours.begin(), colours.end());
    for (int c : distinct) { // ascending, so the first insert wins with the smallest colour
        const auto reach = path_reachability(g, c);
        for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
            if (reach[mask] != 0 && __builtin_popcount(mask) >= 2) by_mask.emplace(mask, c);
        }
    }

    PathCatalogue cat;
    cat.n = n;
    cat.entries = maximal_filter(std::move(by_mask));
    return cat;
}

OracleResult min_cover_exact(const ColouredGraph& g, int s) {
    const int n = g.vertex_count();
    if (n > 14) throw std::invalid_argument("min_cover_exact: n > 14");
    if (s < 1) throw std::invalid_argument("min_cover_exact: s must be >= 1");
    const int r = g.colour_count();
    if (n == 0) return {0, {}};

    const int pick = std::min(s, r);
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    constexpr int kInf = std::numeric_limits<int>::max() / 2;

    int best = kInf;
    PathCatalogue best_cat;
    std::vector<int> best_choice; // chosen entry index per DP step, rebuilt below
    std::set<std::vector<std::uint32_t>> seen_catalogues;

    // all colour subsets of size `pick`, ascending mask order
    for (std::uint32_t tmask = 0; tmask < (std::uint32_t(1) << r); ++tmask) {
        if (__builtin_popcount(tmask) != pick) continue;
        std::vector<int> colours;
        for (std::uint32_t m = tmask; m; m &= m - 1) colours.push_back(__builtin_ctz(m) + 1);
        PathCatalogue cat = enumerate_mono_paths(g, colours);

        std::vector<std::uint32_t> shape;
        shape.reserve(cat.entries.size());
        for (const auto& e : cat.entries) shape.push_back(e.mask);
        if (!seen_catalogues.insert(shape).second) continue; // same masks, same DP

        // candidates per lowest uncovered vertex
        std::vector<std::vector<int>> containing(n);
        for (int e = 0; e < int(cat.entries.size()); ++e) {
            const std::uint32_t mask = cat.entries[e].mask;
            for (std::uint32_t m = mask; m; m &= m - 1) containing[__builtin_ctz(m)].push_back(e);
        }

        std::vector<int> cover(std::size_t(full) + 1, kInf);
        std::vector<int> via(std::size_t(full) + 1, -1);
        cover[0] = 0;
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            const int v = __builtin_ctz(mask);
            for (int e : containing[v]) {
                const int sub = cover[mask & ~cat.entries[e].mask];
                if (sub + 1 < cover[mask]) {
                    cover[mask] = sub + 1;
                    via[mask] = e;
                }
            }
        }
        if (cover[full] < best) {
            best = cover[full];
            best_cat = cat;
            best_choice.clear();
            for (std::uint32_t mask = full; mask;) {
                best_choice.push_back(via[mask]);
                mask &= ~best_cat.entries[via[mask]].mask;
            }
        }
    }

    OracleResult res;
    res.min_size = best;
    for (int e : best_choice) {
        const auto& entry = best_cat.entries[e];
        if (entry.colour == kNoColour)
            res.witness.pieces.push_back(MonoPiece::singleton(__builtin_ctz(entry.mask)));
        else
            res.witness.pieces.push_back(
                MonoPiece::path(realize_path(g, entry.mask, entry.colour), entry.colour));
    }
    return res;
}

} // namespace fewcol
