#include "fewcol/experiment.hpp"

#include "fewcol/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fewcol {

ColouredGraph random_complete_colouring(int n, int r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GraphBuilder b(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v, int(rng() % std::uint64_t(r)) + 1);
    return std::move(b).build();
}

ScalingOutcome run_scaling(int r, int s, int alpha, const std::vector<int>& ns, int seeds,
                           InstanceFamily family, const EngineConfig& base_cfg) {
    ScalingOutcome out;
    std::vector<std::pair<double, double>> points;
    for (int n : ns) {
        ColouredGraph fixed_instance;
        if (family == InstanceFamily::lower_bound)
            fixed_instance = construct_lower_bound(r, s, alpha, n).graph;

        std::vector<int> sizes;
        for (int seed = 0; seed < seeds; ++seed) {
            ColouredGraph random_instance;
            if (family == InstanceFamily::random_complete)
                random_instance = random_complete_colouring(n, r, std::uint64_t(seed));
            const ColouredGraph& g = family == InstanceFamily::random_complete ? random_instance
                                                                               : fixed_instance;
            EngineConfig cfg = base_cfg;
            cfg.rng_seed = std::uint64_t(seed);

            const auto started = std::chrono::steady_clock::now();
            const CoverRunResult run = cover_few_colours(g, s, alpha, cfg);
            const auto elapsed = std::chrono::steady_clock::now() - started;

            ScalingRow row;
            row.r = r;
            row.s = s;
            row.alpha = alpha;
            row.n = n;
            row.seed = std::uint64_t(seed);
            row.engine_size = int(run.covering.pieces.size());
            for (const MonoPiece& p : run.covering.pieces)
                row.singleton_count += p.vertices.size() == 1;
            row.colours_used = run.covering.colours_used();
            row.runtime_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
            sizes.push_back(row.engine_size);
            out.rows.push_back(row);
        }
        std::sort(sizes.begin(), sizes.end());
        const double median = sizes[sizes.size() / 2];
        points.emplace_back(std::log(double(n)), std::log(std::max(1.0, median)));
    }
    out.slope = fit_slope(points);
    return out;
}

double fit_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("fit_slope: need at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = double(points.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::string scaling_csv_header() {
    return "r,s,alpha,n,seed,engine_size,singleton_count,colours_used,runtime_ms";
}

std::string scaling_row_csv(const ScalingRow& row) {
    return std::to_string(row.r) + "," + std::to_string(row.s) + "," + std::to_string(row.alpha) +
           "," + std::to_string(row.n) + "," + std::to_string(row.seed) + "," +
           std::to_string(row.engine_size) + "," + std::to_string(row.singleton_count) + "," +
           std::to_string(row.colours_used) + "," + std::to_string(row.runtime_ms);
}

} // namespace fewcol
