// independence.hpp - exact independence number by branch and bound
#ifndef FEWCOL_INDEPENDENCE_HPP
#define FEWCOL_INDEPENDENCE_HPP

#include "fewcol/graph.hpp"
#include "fewcol/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fewcol {

// Exact maximum independent set size, computed as a maximum clique of the
// complement with greedy-colouring pruning. The budget caps branch-and-bound
// node expansions; when it runs out the result is nullopt instead of an
// answer. Intended for n up to around 60.
std::optional<int> independence_number(const ColouredGraph& g, std::int64_t budget = 50'000'000);

// Same search over a plain adjacency structure (used for uncoloured graphs).
std::optional<int> independence_number(const std::vector<VertexSet>& adjacency,
                                       std::int64_t budget = 50'000'000);

} // namespace fewcol

#endif // FEWCOL_INDEPENDENCE_HPP
