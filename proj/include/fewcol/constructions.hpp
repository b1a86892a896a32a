// constructions.hpp - extremal coloured-graph instances built from Johnson
// blow-ups and layered clique towers, together with their part metadata and
// the checkers that certify the colouring rules
#ifndef FEWCOL_CONSTRUCTIONS_HPP
#define FEWCOL_CONSTRUCTIONS_HPP

#include "fewcol/graph.hpp"
#include "fewcol/kneser.hpp"
#include "fewcol/vertex_set.hpp"

#include <string>
#include <vector>

namespace fewcol {

struct PhiEntry {
    int layer = 0;
    int index = 0;
    int colour = 0;
};

// One labelled vertex class of a construction. Johnson-blow-up parts carry a
// nonempty label (the subset the clique represents); tower parts carry a
// (layer, index) pair.
struct Part {
    std::string name;
    int layer = 0; // 1-based
    int index = 0; // 1-based clique index within layer; 0 for labelled parts
    ColourSet label;
    VertexSet vertices;

    bool is_labelled() const { return label.mask != 0; }
};

struct ConstructionOutput {
    ColouredGraph graph;
    int case_id = 0;
    int r = 0, s = 0, alpha = 0, chi = 0;
    int t = 0;                 // case 3 only; 0 elsewhere
    std::vector<int> k;        // case 2 clique counts per layer; empty elsewhere
    std::vector<PhiEntry> phi; // cases 2 and 3
    std::vector<Part> parts;

    const Part& part_of(int vertex) const;
};

// Which case construct_lower_bound dispatches to for these parameters.
int lower_bound_case(int r, int s, int alpha);

// Case 1, chi = 1 regime (s(alpha+1) < alpha*r): a blow-up of J(r, r-s) into
// near-equal cliques; each edge between the cliques of X and Y (X = Y
// included) gets colour min(X ∩ Y).
ConstructionOutput construct_case1(int r, int s, int alpha, int n);

// Case 2 regime (alpha*r/(alpha+1) <= s < chi*alpha): chi layers of sizes
// floor(n^(i/chi)) with the last layer absorbing the remainder, layer i split
// into k_i cliques with 1 <= k_i <= alpha and sum k_i = s+1; an edge inside a
// clique or leaving it towards a higher layer gets that clique's colour
// phi(i,j).
ConstructionOutput construct_case2(int r, int s, int alpha, int n);

// Case 3 regime (s >= alpha*r/(alpha+1) and s >= chi*alpha): layer 1 is a
// blow-up of J(t, r-s) with t = r - alpha*(chi-1); higher layers are alpha
// equal cliques each; colours follow the Johnson rule inside and above layer
// 1 and the phi rule elsewhere, with phi onto [r] \ [t].
ConstructionOutput construct_case3(int r, int s, int alpha, int n);

// Dispatches on the parameter regime, rejecting r <= s.
ConstructionOutput construct_lower_bound(int r, int s, int alpha, int n);

struct StructureReport {
    bool ok = true;
    std::string detail; // first violation, empty when ok
};

// Recomputes, from the parts and phi alone, the expected colour (or absence)
// of every vertex pair and compares against the stored graph. Also checks
// that the parts partition the vertices and that phi is the declared
// bijection.
StructureReport validate_structure(const ConstructionOutput& out);

// Case 1 starvation: for every colour set T with |T| <= s there is a part
// label X disjoint from T such that every edge touching that part is
// coloured inside X.
bool starvation_case1_holds(const ConstructionOutput& out);

// Cases 2/3 starvation: every edge touching a clique part (i,j) either has
// colour phi(i,j) or reaches into a strictly lower layer; labelled layer-1
// parts only see colours from their own label.
bool starvation_layered_holds(const ConstructionOutput& out);

} // namespace fewcol

#endif // FEWCOL_CONSTRUCTIONS_HPP
