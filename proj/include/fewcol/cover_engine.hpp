// cover_engine.hpp - iterative covering of an r-coloured graph by
// monochromatic paths using at most s colours: exclusive-cover bookkeeping, a
// log-sum potential, ratio-balanced hyperedge selection, removable batches
// via majority-colour bipartite path growth, and the final colour filter
#ifndef FEWCOL_COVER_ENGINE_HPP
#define FEWCOL_COVER_ENGINE_HPP

#include "fewcol/covering.hpp"
#include "fewcol/graph.hpp"
#include "fewcol/kneser.hpp"
#include "fewcol/vertex_set.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fewcol {

struct EngineConfig {
    // Fraction of eta a removable set should reach for a batch step to count
    // as progress.
    double target_fraction = 0.25;
    // Shortest path worth emitting as a piece.
    int min_piece = 2;
    // All sampling randomness flows from this seed.
    std::uint64_t rng_seed = 0;
    // Steps (inside a batch) and batches (inside a run) tolerated below
    // target before giving up on the current phase.
    int max_stall = 8;
};

struct EngineIteration {
    std::vector<int> hyperedge;      // kneser vertex indices, descending |V_{S,X}|
    std::vector<std::int64_t> sizes; // |V_{S,X}| per kneser vertex
    double delta_before = 0;
    double delta_after = 0;
    int batch_size = 0;
    bool reached_target = false; // batch ended by emptying a side, not by stalling
};

struct EngineTrace {
    std::vector<EngineIteration> iterations;
    int final_colour_set = -1; // kneser vertex index chosen for the final filter
    int singletons_added = 0;
    bool stall_fallback = false;
};

class EngineError : public std::runtime_error {
public:
    EngineError(const std::string& what, EngineTrace trace)
        : std::runtime_error(what), trace(std::move(trace)) {}
    EngineTrace trace;
};

// Vertices covered by at least one piece and only by pieces whose colour
// lies in x. Colourless singletons never have a colour in x, so any vertex
// they cover is excluded.
VertexSet exclusive_cover_set(const ColouredGraph& g, const Covering& s, const ColourSet& x);

// delta(S) = sum over kneser vertices X of ln|V_{S,X}|; -infinity as soon as
// one of the sets is empty.
double potential(const ColouredGraph& g, const Covering& s, const KneserHypergraph& kh);

// The hyperedge minimizing the max/min ratio of the exclusive-set sizes,
// ties broken by canonical hyperedge order. Returns the member vertex
// indices sorted by descending size. sizes must align with kh.vertices.
// Throws if kh has no hyperedges.
std::vector<int> balanced_hyperedge(const std::vector<std::int64_t>& sizes,
                                    const KneserHypergraph& kh, std::int64_t n, int chi);

// One batch of pieces against the exclusive sets of the given hyperedge
// (colour sets in descending |V_{S,X}| order): repeatedly sample eta-subsets
// of the residuals, grow a path in the densest pair's majority colour, and
// shrink every side whose colour set avoids that colour. Throws
// std::invalid_argument when some exclusive set is empty and EngineError
// when no sampled pair ever has an edge (the input then violates the
// promised independence bound).
std::vector<MonoPiece> removable_batch(const ColouredGraph& g, const Covering& s,
                                       const std::vector<ColourSet>& hyperedge,
                                       const EngineConfig& cfg);

// Valid covering using any colours: grow the best monochromatic path out of
// each still-uncovered vertex (two-ended, preferring uncovered vertices),
// falling back to bare vertices. Deterministic; at most n pieces.
Covering baseline_cover(const ColouredGraph& g);

// Drops every piece whose colour lies in x. Requires (and checks) that
// exclusive_cover_set(g, s, x) is empty, so the result still covers.
Covering filter_colours(const ColouredGraph& g, const Covering& s, const ColourSet& x);

struct CoverRunResult {
    Covering covering;
    EngineTrace trace;
};

// Full run: baseline, balanced-hyperedge batches while every |V_{S,X}|
// exceeds n^(1/chi), then singletons for the smallest exclusive set and the
// colour filter. The result uses at most s colours. The caller asserts that
// alpha bounds the graph's independence number.
CoverRunResult cover_few_colours(const ColouredGraph& g, int s, int alpha,
                                 const EngineConfig& cfg = {});

} // namespace fewcol

#endif // FEWCOL_COVER_ENGINE_HPP
