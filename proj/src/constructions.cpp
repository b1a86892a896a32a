#include "fewcol/constructions.hpp"

#include "fewcol/johnson.hpp"
#include "fewcol/numeric.hpp"

#include <map>
#include <stdexcept>

namespace fewcol {

namespace {

std::string join_elements(const ColourSet& x) {
    std::string out;
    for (int e : x.elements()) {
        if (!out.empty()) out += ",";
        out += std::to_string(e);
    }
    return out;
}

std::vector<std::int64_t> layer_sizes(std::int64_t n, int chi) {
    std::vector<std::int64_t> sizes(chi);
    std::int64_t used = 0;
    for (int i = 1; i < chi; ++i) {
        sizes[i - 1] = floor_frac_pow(n, i, chi);
        used += sizes[i - 1];
    }
    sizes[chi - 1] = n - used;
    return sizes;
}

// [begin, begin+len) as p contiguous near-equal intervals, larger ones first
std::vector<std::pair<int, int>> equitable_ranges(int begin, std::int64_t len, int p) {
    std::vector<std::pair<int, int>> out;
    const std::int64_t base = len / p, extra = len % p;
    int cursor = begin;
    for (int j = 0; j < p; ++j) {
        const int size = int(base + (j < extra ? 1 : 0));
        out.emplace_back(cursor, cursor + size);
        cursor += size;
    }
    return out;
}

VertexSet range_set(int universe, std::pair<int, int> range) {
    VertexSet s(universe);
    for (int v = range.first; v < range.second; ++v) s.insert(v);
    return s;
}

// k_i per layer with 1 <= k_i <= alpha and sum = s+1, taking as much as
// possible early while leaving room for one per remaining layer.
std::vector<int> clique_counts(int s, int alpha, int chi) {
    std::vector<int> k(chi);
    int remaining = s + 1;
    for (int i = 1; i <= chi; ++i) {
        k[i - 1] = std::min(alpha, remaining - (chi - i));
        remaining -= k[i - 1];
    }
    return k;
}

int phi_colour(const ConstructionOutput& out, const Part& p) {
    for (const PhiEntry& e : out.phi)
        if (e.layer == p.layer && e.index == p.index) return e.colour;
    throw std::logic_error("construction: no phi entry for part " + p.name);
}

void add_clique(GraphBuilder& b, std::pair<int, int> range, int colour) {
    for (int u = range.first; u < range.second; ++u)
        for (int v = u + 1; v < range.second; ++v) b.add_edge(u, v, colour);
}

void add_complete_bipartite(GraphBuilder& b, std::pair<int, int> ra, std::pair<int, int> rb,
                            int colour) {
    for (int u = ra.first; u < ra.second; ++u)
        for (int v = rb.first; v < rb.second; ++v) b.add_edge(u, v, colour);
}

} // namespace

const Part& ConstructionOutput::part_of(int vertex) const {
    for (const Part& p : parts)
        if (p.vertices.contains(vertex)) return p;
    throw std::out_of_range("construction: vertex " + std::to_string(vertex) + " in no part");
}

int lower_bound_case(int r, int s, int alpha) {
    const int chi = chi_formula(r, s, alpha); // validates the parameter range
    if (chi == 1) return 1;
    return s < chi * alpha ? 2 : 3;
}

ConstructionOutput construct_case1(int r, int s, int alpha, int n) {
    if (lower_bound_case(r, s, alpha) != 1)
        throw std::invalid_argument("case 1 requires s*(alpha+1) < alpha*r; got r=" +
                                    std::to_string(r) + " s=" + std::to_string(s) +
                                    " alpha=" + std::to_string(alpha));
    const int m = int(binomial(r, r - s));
    if (n < m)
        throw std::invalid_argument("case 1 requires n >= C(r, r-s) = " + std::to_string(m));

    ConstructionOutput out;
    out.case_id = 1;
    out.r = r;
    out.s = s;
    out.alpha = alpha;
    out.chi = 1;

    const JohnsonGraph jg = johnson(r, r - s);
    const auto ranges = equitable_ranges(0, n, m);
    for (int i = 0; i < m; ++i) {
        Part p;
        p.label = ColourSet{jg.vertex_sets[i]};
        p.name = "V_{" + join_elements(p.label) + "}";
        p.layer = 1;
        p.index = 0;
        p.vertices = range_set(n, ranges[i]);
        out.parts.push_back(std::move(p));
    }

    GraphBuilder b(n, r);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const std::uint32_t common = jg.vertex_sets[i] & jg.vertex_sets[j];
            if (!common) continue;
            const int colour = ColourSet{common}.min_colour();
            if (i == j)
                add_clique(b, ranges[i], colour);
            else
                add_complete_bipartite(b, ranges[i], ranges[j], colour);
        }
    }
    out.graph = std::move(b).build();
    return out;
}

ConstructionOutput construct_case2(int r, int s, int alpha, int n) {
    const int which = lower_bound_case(r, s, alpha);
    if (which == 1)
        throw std::invalid_argument("case 2 requires s*(alpha+1) >= alpha*r (case 1 applies)");
    if (which == 3)
        throw std::invalid_argument("case 2 requires s < chi*alpha (case 3 applies)");
    const int chi = chi_formula(r, s, alpha);

    if (floor_frac_pow(n, 1, chi) < r)
        throw std::invalid_argument("case 2: n too small, floor(n^(1/chi)) = " +
                                    std::to_string(floor_frac_pow(n, 1, chi)) + " < r = " +
                                    std::to_string(r));
    const auto sizes = layer_sizes(n, chi);
    const auto k = clique_counts(s, alpha, chi);
    for (int i = 1; i <= chi; ++i)
        if (sizes[i - 1] < k[i - 1])
            throw std::invalid_argument("case 2: n too small, layer " + std::to_string(i) +
                                        " has " + std::to_string(sizes[i - 1]) +
                                        " vertices but needs " + std::to_string(k[i - 1]));

    ConstructionOutput out;
    out.case_id = 2;
    out.r = r;
    out.s = s;
    out.alpha = alpha;
    out.chi = chi;
    out.k = k;

    std::vector<std::vector<std::pair<int, int>>> layer_ranges(chi);
    int cursor = 0;
    int next_colour = 1;
    for (int i = 1; i <= chi; ++i) {
        layer_ranges[i - 1] = equitable_ranges(cursor, sizes[i - 1], k[i - 1]);
        cursor += int(sizes[i - 1]);
        for (int j = 1; j <= k[i - 1]; ++j) {
            Part p;
            p.name = "V_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            p.layer = i;
            p.index = j;
            p.vertices = range_set(n, layer_ranges[i - 1][j - 1]);
            out.parts.push_back(std::move(p));
            out.phi.push_back({i, j, next_colour++});
        }
    }

    GraphBuilder b(n, r);
    for (const Part& p : out.parts) {
        const int colour = phi_colour(out, p);
        const auto range = layer_ranges[p.layer - 1][p.index - 1];
        add_clique(b, range, colour);
        for (int i2 = p.layer + 1; i2 <= chi; ++i2)
            for (const auto& upper : layer_ranges[i2 - 1])
                add_complete_bipartite(b, range, upper, colour);
    }
    out.graph = std::move(b).build();
    return out;
}

ConstructionOutput construct_case3(int r, int s, int alpha, int n) {
    const int which = lower_bound_case(r, s, alpha);
    if (which == 1)
        throw std::invalid_argument("case 3 requires s*(alpha+1) >= alpha*r (case 1 applies)");
    if (which == 2)
        throw std::invalid_argument("case 3 requires s >= chi*alpha (case 2 applies)");
    const int chi = chi_formula(r, s, alpha);
    const int t = r - alpha * (chi - 1);
    const int m1 = int(binomial(t, r - s));

    if (floor_frac_pow(n, 1, chi) < m1)
        throw std::invalid_argument("case 3: n too small, floor(n^(1/chi)) = " +
                                    std::to_string(floor_frac_pow(n, 1, chi)) +
                                    " < C(t, r-s) = " + std::to_string(m1));
    const auto sizes = layer_sizes(n, chi);
    for (int i = 2; i <= chi; ++i)
        if (sizes[i - 1] < alpha)
            throw std::invalid_argument("case 3: n too small, layer " + std::to_string(i) +
                                        " has " + std::to_string(sizes[i - 1]) +
                                        " vertices but needs " + std::to_string(alpha));

    ConstructionOutput out;
    out.case_id = 3;
    out.r = r;
    out.s = s;
    out.alpha = alpha;
    out.chi = chi;
    out.t = t;

    const JohnsonGraph jg = johnson(t, r - s);
    const auto johnson_ranges = equitable_ranges(0, sizes[0], m1);
    for (int i = 0; i < m1; ++i) {
        Part p;
        p.label = ColourSet{jg.vertex_sets[i]};
        p.name = "V_{1,{" + join_elements(p.label) + "}}";
        p.layer = 1;
        p.index = 0;
        p.vertices = range_set(n, johnson_ranges[i]);
        out.parts.push_back(std::move(p));
    }

    std::vector<std::vector<std::pair<int, int>>> layer_ranges(chi);
    layer_ranges[0] = johnson_ranges;
    int cursor = int(sizes[0]);
    int next_colour = t + 1;
    for (int i = 2; i <= chi; ++i) {
        layer_ranges[i - 1] = equitable_ranges(cursor, sizes[i - 1], alpha);
        cursor += int(sizes[i - 1]);
        for (int j = 1; j <= alpha; ++j) {
            Part p;
            p.name = "V_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            p.layer = i;
            p.index = j;
            p.vertices = range_set(n, layer_ranges[i - 1][j - 1]);
            out.parts.push_back(std::move(p));
            out.phi.push_back({i, j, next_colour++});
        }
    }

    GraphBuilder b(n, r);
    // inside layer 1: the Johnson blow-up rule
    for (int i = 0; i < m1; ++i) {
        for (int j = i; j < m1; ++j) {
            const std::uint32_t common = jg.vertex_sets[i] & jg.vertex_sets[j];
            if (!common) continue;
            const int colour = ColourSet{common}.min_colour();
            if (i == j)
                add_clique(b, johnson_ranges[i], colour);
            else
                add_complete_bipartite(b, johnson_ranges[i], johnson_ranges[j], colour);
        }
    }
    // layer 1 upward: the label's smallest colour
    for (int i = 0; i < m1; ++i) {
        const int colour = ColourSet{jg.vertex_sets[i]}.min_colour();
        for (int i2 = 2; i2 <= chi; ++i2)
            for (const auto& upper : layer_ranges[i2 - 1])
                add_complete_bipartite(b, johnson_ranges[i], upper, colour);
    }
    // clique layers: own colour inside and upward
    for (const Part& p : out.parts) {
        if (p.layer == 1) continue;
        const int colour = phi_colour(out, p);
        const auto range = layer_ranges[p.layer - 1][p.index - 1];
        add_clique(b, range, colour);
        for (int i2 = p.layer + 1; i2 <= chi; ++i2)
            for (const auto& upper : layer_ranges[i2 - 1])
                add_complete_bipartite(b, range, upper, colour);
    }
    out.graph = std::move(b).build();
    return out;
}

ConstructionOutput construct_lower_bound(int r, int s, int alpha, int n) {
    switch (lower_bound_case(r, s, alpha)) {
    case 1: return construct_case1(r, s, alpha, n);
    case 2: return construct_case2(r, s, alpha, n);
    default: return construct_case3(r, s, alpha, n);
    }
}

namespace {

// Expected colour between (possibly equal) parts, recomputed from metadata.
int expected_colour(const ConstructionOutput& out, const Part& a, const Part& b) {
    const bool same = &a == &b;
    switch (out.case_id) {
    case 1: {
        const std::uint32_t common = a.label.mask & b.label.mask;
        return common ? ColourSet{common}.min_colour() : kNoColour;
    }
    case 2: {
        if (same) return phi_colour(out, a);
        if (a.layer == b.layer) return kNoColour;
        return phi_colour(out, a.layer < b.layer ? a : b);
    }
    case 3: {
        if (a.is_labelled() && b.is_labelled()) {
            const std::uint32_t common = a.label.mask & b.label.mask;
            return common ? ColourSet{common}.min_colour() : kNoColour;
        }
        if (a.is_labelled()) return a.label.min_colour();
        if (b.is_labelled()) return b.label.min_colour();
        if (same) return phi_colour(out, a);
        if (a.layer == b.layer) return kNoColour;
        return phi_colour(out, a.layer < b.layer ? a : b);
    }
    default: throw std::logic_error("construction: unknown case id");
    }
}

} // namespace

StructureReport validate_structure(const ConstructionOutput& out) {
    const int n = out.graph.vertex_count();
    std::vector<int> owner(n, -1);
    for (int pi = 0; pi < int(out.parts.size()); ++pi) {
        bool bad = false;
        out.parts[pi].vertices.for_each([&](int v) {
            if (v >= n || owner[v] != -1) bad = true;
            else owner[v] = pi;
        });
        if (bad) return {false, "parts do not partition the vertices (at part " +
                                    out.parts[pi].name + ")"};
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) return {false, "vertex " + std::to_string(v) + " in no part"};

    // phi must biject onto its declared codomain
    std::map<std::pair<int, int>, int> phi;
    std::vector<bool> hit(out.r + 1, false);
    for (const PhiEntry& e : out.phi) {
        if (!phi.emplace(std::make_pair(e.layer, e.index), e.colour).second)
            return {false, "phi has a duplicate key"};
        if (e.colour < 1 || e.colour > out.r || hit[e.colour])
            return {false, "phi is not injective into 1..r"};
        hit[e.colour] = true;
    }
    if (out.case_id == 2) {
        for (int c = 1; c <= out.s + 1; ++c)
            if (!hit[c]) return {false, "phi misses colour " + std::to_string(c)};
        if (int(out.phi.size()) != out.s + 1) return {false, "phi domain size is not s+1"};
    } else if (out.case_id == 3) {
        for (int c = out.t + 1; c <= out.r; ++c)
            if (!hit[c]) return {false, "phi misses colour " + std::to_string(c)};
        if (int(out.phi.size()) != out.r - out.t)
            return {false, "phi domain size is not r - t"};
    } else if (!out.phi.empty()) {
        return {false, "case 1 carries no phi"};
    }

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const Part& a = out.parts[owner[u]];
            const Part& b = out.parts[owner[v]];
            const int expect = expected_colour(out, a, b);
            const int actual = out.graph.colour_of(u, v);
            if (expect != actual)
                return {false, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") expects colour " + std::to_string(expect) + ", graph has " +
                                   std::to_string(actual)};
        }
    }
    return {};
}

bool starvation_case1_holds(const ConstructionOutput& out) {
    const int n = out.graph.vertex_count();
    // parts whose every incident edge is coloured inside the label
    std::vector<ColourSet> safe_labels;
    for (const Part& p : out.parts) {
        bool good = true;
        p.vertices.for_each([&](int u) {
            const std::uint8_t* row = out.graph.row(u);
            for (int v = 0; v < n && good; ++v)
                if (row[v] != kNoColour && !p.label.contains(row[v])) good = false;
        });
        if (good) safe_labels.push_back(p.label);
    }
    for (std::uint32_t tmask = 0; tmask < (std::uint32_t(1) << out.r); ++tmask) {
        if (__builtin_popcount(tmask) > out.s) continue;
        bool found = false;
        for (const ColourSet& x : safe_labels)
            if ((x.mask & tmask) == 0) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool starvation_layered_holds(const ConstructionOutput& out) {
    const int n = out.graph.vertex_count();
    std::vector<int> layer_of(n);
    for (const Part& p : out.parts)
        p.vertices.for_each([&](int v) { layer_of[v] = p.layer; });

    for (const Part& p : out.parts) {
        bool good = true;
        if (p.is_labelled()) {
            // layer-1 blow-up part: only its own label's colours appear
            p.vertices.for_each([&](int u) {
                const std::uint8_t* row = out.graph.row(u);
                for (int v = 0; v < n && good; ++v)
                    if (row[v] != kNoColour && !p.label.contains(row[v])) good = false;
            });
        } else {
            const int own = phi_colour(out, p);
            p.vertices.for_each([&](int u) {
                const std::uint8_t* row = out.graph.row(u);
                for (int v = 0; v < n && good; ++v)
                    if (row[v] != kNoColour && row[v] != own && layer_of[v] >= p.layer)
                        good = false;
            });
        }
        if (!good) return false;
    }
    return true;
}

} // namespace fewcol
