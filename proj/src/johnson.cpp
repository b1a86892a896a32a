#include "fewcol/johnson.hpp"

#include <stdexcept>

namespace fewcol {

JohnsonGraph johnson(int a, int b) {
    if (b < 1 || b > a) throw std::invalid_argument("johnson: need 1 <= b <= a");
    if (a > 26) throw std::invalid_argument("johnson: a > 26 is out of range");
    JohnsonGraph jg;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << a); ++m)
        if (__builtin_popcount(m) == b) jg.vertex_sets.push_back(m);
    const int n = int(jg.vertex_sets.size());
    jg.graph = SimpleGraph(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (jg.vertex_sets[u] & jg.vertex_sets[v]) jg.graph.add_edge(u, v);
    return jg;
}

} // namespace fewcol
