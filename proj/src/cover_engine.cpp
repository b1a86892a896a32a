#include "fewcol/cover_engine.hpp"

#include "fewcol/independence.hpp"
#include "fewcol/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>

namespace fewcol {

namespace {

// Per-vertex record of covering-piece colours: bit 0 marks a colourless
// piece, bit c a piece of colour c.
class CoverState {
public:
    CoverState(const ColouredGraph& g, const Covering& s) : bits_(g.vertex_count(), 0) {
        for (const MonoPiece& p : s.pieces) add(p);
    }

    void add(const MonoPiece& p) {
        const std::uint32_t bit = p.colour == kNoColour ? 1u : (1u << p.colour);
        for (int v : p.vertices) bits_[v] |= bit;
    }

    static std::uint32_t colour_bits(const ColourSet& x) { return x.mask << 1; }

    bool exclusive(int v, std::uint32_t xbits) const {
        return bits_[v] != 0 && (bits_[v] & ~xbits) == 0;
    }

    std::vector<int> exclusive_vertices(const ColourSet& x) const {
        std::vector<int> out;
        const std::uint32_t xb = colour_bits(x);
        for (int v = 0; v < int(bits_.size()); ++v)
            if (exclusive(v, xb)) out.push_back(v);
        return out;
    }

    std::vector<std::int64_t> sizes(const KneserHypergraph& kh) const {
        std::vector<std::int64_t> out(kh.vertices.size(), 0);
        std::vector<std::uint32_t> xb(kh.vertices.size());
        for (std::size_t i = 0; i < kh.vertices.size(); ++i) xb[i] = colour_bits(kh.vertices[i]);
        for (std::uint32_t m : bits_) {
            if (m == 0) continue;
            for (std::size_t i = 0; i < xb.size(); ++i) out[i] += (m & ~xb[i]) == 0;
        }
        return out;
    }

private:
    std::vector<std::uint32_t> bits_;
};

double delta_of(const std::vector<std::int64_t>& sizes) {
    double d = 0;
    for (std::int64_t v : sizes) {
        if (v == 0) return -std::numeric_limits<double>::infinity();
        d += std::log(double(v));
    }
    return d;
}

// first `take` elements after a partial shuffle
std::vector<int> sample_subset(std::vector<int>& pool, int take, std::mt19937_64& rng) {
    take = std::min<int>(take, int(pool.size()));
    for (int i = 0; i < take; ++i) {
        std::uniform_int_distribution<int> pick(i, int(pool.size()) - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }
    return {pool.begin(), pool.begin() + take};
}

// Greedy two-ended growth of a colour-k path inside the bipartite graph
// between a and b, restarting from random seed edges and keeping the longest
// path found. Returns empty when the pair has no colour-k edge.
std::vector<int> grow_bipartite_path(const ColouredGraph& g, const std::vector<int>& a,
                                     const std::vector<int>& b, int colour,
                                     std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u : a) {
        const std::uint8_t* row = g.row(u);
        for (int v : b)
            if (row[v] == colour) edges.emplace_back(u, v);
    }
    if (edges.empty()) return {};

    const int n = g.vertex_count();
    std::vector<char> in_a(n, 0), used(n, 0);
    for (int u : a) in_a[u] = 1;

    std::vector<int> best;
    std::vector<int> candidates;
    const int restarts = 3;
    for (int attempt = 0; attempt < restarts; ++attempt) {
        const auto [sa, sb] = edges[std::uniform_int_distribution<std::size_t>(
            0, edges.size() - 1)(rng)];
        std::deque<int> path{sa, sb};
        used[sa] = used[sb] = 1;

        auto extend = [&](int end) -> int {
            const std::vector<int>& opposite = in_a[end] ? b : a;
            const std::uint8_t* row = g.row(end);
            candidates.clear();
            for (int w : opposite)
                if (!used[w] && row[w] == colour) candidates.push_back(w);
            if (candidates.empty()) return -1;
            return candidates[std::uniform_int_distribution<std::size_t>(
                0, candidates.size() - 1)(rng)];
        };

        bool grew = true;
        while (grew) {
            grew = false;
            if (int w = extend(path.back()); w != -1) {
                path.push_back(w);
                used[w] = 1;
                grew = true;
            }
            if (int w = extend(path.front()); w != -1) {
                path.push_front(w);
                used[w] = 1;
                grew = true;
            }
        }
        if (int(path.size()) > int(best.size())) best.assign(path.begin(), path.end());
        for (int v : path) used[v] = 0;
        if (int(best.size()) >= int(a.size() + b.size())) break;
    }
    return best;
}

struct BatchOutcome {
    std::vector<MonoPiece> pieces;
    bool reached_target = false;
};

BatchOutcome run_batch(const ColouredGraph& g, const std::vector<ColourSet>& edge,
                       std::vector<std::vector<int>> residuals, const EngineConfig& cfg,
                       std::mt19937_64& rng) {
    const int sides = int(edge.size());
    const int n = g.vertex_count();
    std::int64_t smallest = std::numeric_limits<std::int64_t>::max();
    std::int64_t largest = 0;
    for (const auto& r : residuals) {
        smallest = std::min<std::int64_t>(smallest, r.size());
        largest = std::max<std::int64_t>(largest, r.size());
    }
    const std::int64_t eta = (smallest + 1) / 2;

    BatchOutcome out;
    std::vector<char> side_member(n, 0);
    int stall = 0;
    const std::int64_t target =
        std::max<std::int64_t>(1, std::int64_t(cfg.target_fraction * double(eta)));
    const std::int64_t iter_cap = 64 + 16 * ((sides * largest) / std::max<std::int64_t>(1, eta) + 1);

    auto attempt = [&](int min_len) -> bool {
        // sample one eta-subset per residual
        std::vector<std::vector<int>> samples(sides);
        for (int i = 0; i < sides; ++i) samples[i] = sample_subset(residuals[i], int(eta), rng);

        // densest pair
        int bi = -1, bj = -1;
        std::int64_t best_edges = -1;
        std::vector<std::int64_t> best_profile;
        for (int i = 0; i < sides; ++i) {
            for (int j = i + 1; j < sides; ++j) {
                auto profile = colour_profile_dense(g, samples[i], samples[j]);
                std::int64_t total = 0;
                for (int c = 1; c <= g.colour_count(); ++c) total += profile[c];
                if (total > best_edges) {
                    best_edges = total;
                    bi = i;
                    bj = j;
                    best_profile = std::move(profile);
                }
            }
        }
        if (best_edges <= 0) return false;

        int majority = 1;
        for (int c = 2; c <= g.colour_count(); ++c)
            if (best_profile[c] > best_profile[majority]) majority = c;

        auto path = grow_bipartite_path(g, samples[bi], samples[bj], majority, rng);
        if (int(path.size()) < min_len) return false;

        out.pieces.push_back(MonoPiece::path(path, majority));
        std::int64_t removed_max = 0;
        for (int side : {bi, bj}) {
            if (edge[side].contains(majority)) continue; // piece colour still inside X
            for (int v : samples[side]) side_member[v] = 1;
            std::int64_t removed = 0;
            std::vector<int> kept;
            kept.reserve(residuals[side].size());
            std::vector<char> on_path(n, 0);
            for (int v : path)
                if (side_member[v]) on_path[v] = 1;
            for (int v : residuals[side]) {
                if (on_path[v]) ++removed;
                else kept.push_back(v);
            }
            residuals[side] = std::move(kept);
            for (int v : samples[side]) side_member[v] = 0;
            removed_max = std::max(removed_max, removed);
        }
        if (removed_max >= target) stall = 0;
        else ++stall;
        return true;
    };

    for (std::int64_t iter = 0; iter < iter_cap; ++iter) {
        if (!attempt(cfg.min_piece)) ++stall;
        bool drained = false;
        for (const auto& r : residuals) drained = drained || std::int64_t(r.size()) <= eta;
        if (drained) {
            out.reached_target = true;
            break;
        }
        if (stall >= cfg.max_stall) break;
    }

    if (out.pieces.empty()) {
        // Accept any edge at all before declaring the input defective: with
        // independence number <= sides-1, some sampled pair always has one.
        if (!attempt(2))
            throw EngineError(
                "removable_batch: no edge between any sampled pair; the graph "
                "violates the promised independence bound",
                {});
    }
    return out;
}

void check_config(const EngineConfig& cfg) {
    if (!(cfg.target_fraction > 0.0 && cfg.target_fraction <= 1.0))
        throw std::invalid_argument("engine: target_fraction must be in (0, 1]");
    if (cfg.min_piece < 2) throw std::invalid_argument("engine: min_piece must be >= 2");
    if (cfg.max_stall < 1) throw std::invalid_argument("engine: max_stall must be >= 1");
}

// CoverState packs colours into a 32-bit word
void check_colour_range(const ColouredGraph& g) {
    if (g.colour_count() > 30)
        throw std::invalid_argument("engine: supports at most 30 colours");
}

// size <= n^(1/chi), exactly
bool at_most_chi_root(std::int64_t size, std::int64_t n, int chi) {
    return !pow_exceeds(size, chi, n, 1);
}

} // namespace

VertexSet exclusive_cover_set(const ColouredGraph& g, const Covering& s, const ColourSet& x) {
    check_colour_range(g);
    CoverState state(g, s);
    return VertexSet::of(g.vertex_count(), state.exclusive_vertices(x));
}

double potential(const ColouredGraph& g, const Covering& s, const KneserHypergraph& kh) {
    check_colour_range(g);
    CoverState state(g, s);
    return delta_of(state.sizes(kh));
}

std::vector<int> balanced_hyperedge(const std::vector<std::int64_t>& sizes,
                                    const KneserHypergraph& kh, std::int64_t /*n*/, int /*chi*/) {
    if (kh.hyperedges.empty())
        throw std::invalid_argument("balanced_hyperedge: hypergraph has no hyperedges");
    if (sizes.size() != kh.vertices.size())
        throw std::invalid_argument("balanced_hyperedge: sizes misaligned with vertices");

    int best = -1;
    std::int64_t best_max = 1, best_min = 1;
    for (int e = 0; e < int(kh.hyperedges.size()); ++e) {
        std::int64_t mx = 0, mn = std::numeric_limits<std::int64_t>::max();
        for (int v : kh.hyperedges[e]) {
            mx = std::max(mx, sizes[v]);
            mn = std::min(mn, sizes[v]);
        }
        // spread mx/mn < best_max/best_min, by cross multiplication
        if (best == -1 || mx * best_min < best_max * mn) {
            best = e;
            best_max = mx;
            best_min = mn;
        }
    }
    std::vector<int> members = kh.hyperedges[best];
    std::stable_sort(members.begin(), members.end(),
                     [&](int a, int b) { return sizes[a] > sizes[b]; });
    return members;
}

std::vector<MonoPiece> removable_batch(const ColouredGraph& g, const Covering& s,
                                       const std::vector<ColourSet>& hyperedge,
                                       const EngineConfig& cfg) {
    check_config(cfg);
    check_colour_range(g);
    CoverState state(g, s);
    std::vector<std::vector<int>> residuals;
    for (const ColourSet& x : hyperedge) {
        residuals.push_back(state.exclusive_vertices(x));
        if (residuals.back().empty())
            throw std::invalid_argument("removable_batch: exclusive cover set of {" +
                                        [&] {
                                            std::string t;
                                            for (int c : x.elements())
                                                t += (t.empty() ? "" : ",") + std::to_string(c);
                                            return t;
                                        }() +
                                        "} is empty");
    }
    // keep sides in descending size order regardless of caller's order
    std::vector<int> order(hyperedge.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return residuals[a].size() > residuals[b].size(); });
    std::vector<ColourSet> edge_sorted;
    std::vector<std::vector<int>> residuals_sorted;
    for (int i : order) {
        edge_sorted.push_back(hyperedge[i]);
        residuals_sorted.push_back(std::move(residuals[i]));
    }

    std::mt19937_64 rng(cfg.rng_seed);
    return run_batch(g, edge_sorted, std::move(residuals_sorted), cfg, rng).pieces;
}

Covering baseline_cover(const ColouredGraph& g) {
    const int n = g.vertex_count();
    const int r = g.colour_count();
    Covering s;
    std::vector<char> covered(n, 0), in_path(n, 0);

    auto grow = [&](int start, int colour) {
        std::deque<int> path{start};
        in_path[start] = 1;
        auto extend = [&](int end) -> int {
            const std::uint8_t* row = g.row(end);
            int best = -1, best_pref = -1;
            for (int w = 0; w < n; ++w) {
                if (in_path[w] || row[w] != colour) continue;
                const int pref = covered[w] ? 0 : 1;
                if (pref > best_pref) {
                    best_pref = pref;
                    best = w;
                    if (pref == 1) break; // ascending scan: first uncovered wins
                }
            }
            return best;
        };
        bool grew = true;
        while (grew) {
            grew = false;
            if (int w = extend(path.back()); w != -1) {
                path.push_back(w);
                in_path[w] = 1;
                grew = true;
            }
            if (int w = extend(path.front()); w != -1) {
                path.push_front(w);
                in_path[w] = 1;
                grew = true;
            }
        }
        for (int v : path) in_path[v] = 0;
        return std::vector<int>(path.begin(), path.end());
    };

    for (int start = 0; start < n; ++start) {
        if (covered[start]) continue;
        std::vector<int> best;
        int best_new = -1, best_colour = kNoColour;
        for (int c = 1; c <= r; ++c) {
            auto path = grow(start, c);
            int fresh = 0;
            for (int v : path) fresh += !covered[v];
            if (fresh > best_new) {
                best_new = fresh;
                best = std::move(path);
                best_colour = c;
            }
        }
        if (best.size() >= 2) s.pieces.push_back(MonoPiece::path(best, best_colour));
        else s.pieces.push_back(MonoPiece::singleton(start));
        for (int v : s.pieces.back().vertices) covered[v] = 1;
    }
    return s;
}

Covering filter_colours(const ColouredGraph& g, const Covering& s, const ColourSet& x) {
    if (!exclusive_cover_set(g, s, x).empty())
        throw std::invalid_argument(
            "filter_colours: some vertex is covered only by colours inside the filter set");
    Covering out;
    for (const MonoPiece& p : s.pieces)
        if (p.colour == kNoColour || !x.contains(p.colour)) out.pieces.push_back(p);
    return out;
}

CoverRunResult cover_few_colours(const ColouredGraph& g, int s, int alpha,
                                 const EngineConfig& cfg) {
    check_config(cfg);
    check_colour_range(g);
    const int n = g.vertex_count();
    const int r = g.colour_count();
    if (s < 1 || s >= r)
        throw std::invalid_argument("cover_few_colours: need 1 <= s < r");
    if (alpha < 1) throw std::invalid_argument("cover_few_colours: need alpha >= 1");
    if (n <= 30) {
        // cheap enough to verify the caller's promise exactly
        const auto exact = independence_number(g, 1'000'000);
        if (exact && *exact > alpha)
            throw std::invalid_argument("cover_few_colours: independence number " +
                                        std::to_string(*exact) + " exceeds promised alpha " +
                                        std::to_string(alpha));
    }
    const int chi = chi_formula(r, s, alpha);

    CoverRunResult res;
    if (chi == 1) {
        // hyperedge-free regime: n bare vertices already use zero colours
        for (int v = 0; v < n; ++v) res.covering.pieces.push_back(MonoPiece::singleton(v));
        res.trace.singletons_added = n;
        return res;
    }

    const KneserHypergraph kh = build_kneser(r, s, alpha);
    Covering cover = baseline_cover(g);
    CoverState state(g, cover);
    std::mt19937_64 rng(cfg.rng_seed);

    const std::int64_t batch_cap =
        4 * binomial(r, r - s) * (floor_frac_pow(n, 1, chi) + 1);
    int stall = 0;

    while (true) {
        const auto sizes = state.sizes(kh);
        bool some_small = false;
        for (std::int64_t sz : sizes) some_small = some_small || at_most_chi_root(sz, n, chi);
        if (some_small) break;

        if (std::int64_t(res.trace.iterations.size()) >= batch_cap)
            throw EngineError("cover_few_colours: batch budget of " +
                                  std::to_string(batch_cap) + " exhausted without progress",
                              res.trace);

        const auto members = balanced_hyperedge(sizes, kh, n, chi);
        std::vector<ColourSet> edge;
        std::vector<std::vector<int>> residuals;
        for (int m : members) {
            edge.push_back(kh.vertices[m]);
            residuals.push_back(state.exclusive_vertices(kh.vertices[m]));
        }

        EngineIteration it;
        it.hyperedge = members;
        it.sizes = sizes;
        it.delta_before = delta_of(sizes);

        BatchOutcome batch;
        try {
            batch = run_batch(g, edge, std::move(residuals), cfg, rng);
        } catch (EngineError& err) {
            err.trace = res.trace;
            throw;
        }
        for (const MonoPiece& p : batch.pieces) {
            cover.pieces.push_back(p);
            state.add(p);
        }
        it.batch_size = int(batch.pieces.size());
        it.reached_target = batch.reached_target;
        it.delta_after = delta_of(state.sizes(kh));
        res.trace.iterations.push_back(std::move(it));

        if (batch.reached_target) stall = 0;
        else if (++stall >= cfg.max_stall) {
            res.trace.stall_fallback = true;
            break;
        }
    }

    // bare vertices for the smallest exclusive set, then drop its colours
    const auto sizes = state.sizes(kh);
    int xi = 0;
    for (int i = 1; i < int(sizes.size()); ++i)
        if (sizes[i] < sizes[xi]) xi = i;
    res.trace.final_colour_set = xi;

    const ColourSet x = kh.vertices[xi];
    for (int v : state.exclusive_vertices(x)) {
        cover.pieces.push_back(MonoPiece::singleton(v));
        ++res.trace.singletons_added;
    }
    res.covering = filter_colours(g, cover, x);
    return res;
}

} // namespace fewcol
