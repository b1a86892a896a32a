#include "fewcol/kneser.hpp"

#include <algorithm>
#include <stdexcept>

namespace fewcol {

int KneserHypergraph::vertex_index(const ColourSet& x) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    if (it == vertices.end() || !(*it == x)) return -1;
    return int(it - vertices.begin());
}

namespace {

void check_params(int r, int s, int alpha) {
    if (s < 1 || s >= r) throw std::invalid_argument("kneser: need 1 <= s < r");
    if (r > 26) throw std::invalid_argument("kneser: r > 26 is out of range");
    if (alpha < 1) throw std::invalid_argument("kneser: need alpha >= 1");
}

void enumerate_hyperedges(const std::vector<ColourSet>& vertices, int uniformity, int from,
                          std::uint32_t used, std::vector<int>& stack,
                          std::vector<std::vector<int>>& out) {
    if (int(stack.size()) == uniformity) {
        out.push_back(stack);
        return;
    }
    for (int i = from; i < int(vertices.size()); ++i) {
        if (vertices[i].mask & used) continue;
        stack.push_back(i);
        enumerate_hyperedges(vertices, uniformity, i + 1, used | vertices[i].mask, stack, out);
        stack.pop_back();
    }
}

} // namespace

KneserHypergraph build_kneser(int r, int s, int alpha) {
    check_params(r, s, alpha);
    KneserHypergraph kh;
    kh.r = r;
    kh.s = s;
    kh.alpha = alpha;
    const int k = r - s;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << r); ++m)
        if (__builtin_popcount(m) == k) kh.vertices.push_back(ColourSet{m});
    std::vector<int> stack;
    enumerate_hyperedges(kh.vertices, alpha + 1, 0, 0, stack, kh.hyperedges);
    return kh;
}

int chi_formula(int r, int s, int alpha) {
    check_params(r, s, alpha);
    if (std::int64_t(s) * (alpha + 1) < std::int64_t(alpha) * r) return 1;
    return 1 + s - r + (s + alpha) / alpha; // (s + alpha) / alpha == ceil((s+1)/alpha)
}

namespace {

class ColouringSearch {
public:
    ColouringSearch(const KneserHypergraph& kh, int num_colours, std::int64_t& budget)
        : kh_(kh), num_colours_(num_colours), budget_(budget),
          colour_(kh.vertices.size(), 0), incident_(kh.vertices.size()) {
        for (int e = 0; e < int(kh.hyperedges.size()); ++e)
            for (int v : kh.hyperedges[e]) incident_[v].push_back(e);
    }

    // true = colouring found (in colours()); exceeded() reports budget death.
    bool run() { return search(0, 0); }
    bool exceeded() const { return exceeded_; }
    const std::vector<int>& colours() const { return colour_; }

private:
    bool monochromatic_conflict(int v) const {
        const int c0 = colour_[v];
        for (int e : incident_[v]) {
            bool mono = true;
            for (int u : kh_.hyperedges[e]) {
                if (colour_[u] != c0) {
                    mono = false;
                    break;
                }
            }
            if (mono) return true;
        }
        return false;
    }

    bool search(int v, int max_used) {
        if (--budget_ < 0) {
            exceeded_ = true;
            return false;
        }
        if (v == int(kh_.vertices.size())) return true;
        const int limit = std::min(num_colours_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            colour_[v] = c;
            if (!monochromatic_conflict(v) && search(v + 1, std::max(max_used, c))) return true;
            if (exceeded_) break;
        }
        colour_[v] = 0;
        return false;
    }

    const KneserHypergraph& kh_;
    int num_colours_;
    std::int64_t& budget_;
    bool exceeded_ = false;
    std::vector<int> colour_;
    std::vector<std::vector<int>> incident_;
};

} // namespace

ChiExactResult chi_exact(const KneserHypergraph& kh, std::int64_t budget) {
    if (kh.vertices.empty()) return {0, {}};
    // one colour per vertex always works: hyperedges have alpha+1 >= 2 members
    for (int c = 1; c <= int(kh.vertices.size()); ++c) {
        ColouringSearch search(kh, c, budget);
        if (search.run()) return {c, search.colours()};
        if (search.exceeded()) return {std::nullopt, {}};
    }
    return {int(kh.vertices.size()), {}};
}

std::optional<std::vector<int>> proper_colouring(const KneserHypergraph& kh, int c) {
    if (c < 1) return std::nullopt;
    std::int64_t budget = std::int64_t(1) << 62;
    ColouringSearch search(kh, c, budget);
    if (search.run()) return search.colours();
    return std::nullopt;
}

} // namespace fewcol
