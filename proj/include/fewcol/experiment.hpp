// experiment.hpp - seeded scaling runs over instance families and the
// log-log slope fit
#ifndef FEWCOL_EXPERIMENT_HPP
#define FEWCOL_EXPERIMENT_HPP

#include "fewcol/cover_engine.hpp"
#include "fewcol/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fewcol {

struct ScalingRow {
    int r = 0, s = 0, alpha = 0;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
    int engine_size = 0;
    int singleton_count = 0;
    int colours_used = 0;
    std::int64_t runtime_ms = 0;
};

enum class InstanceFamily {
    random_complete, // K_n with a uniform seeded r-colouring
    lower_bound,     // construct_lower_bound(r, s, alpha, n)
};

// Complete graph on n vertices, every edge coloured uniformly in 1..r.
ColouredGraph random_complete_colouring(int n, int r, std::uint64_t seed);

struct ScalingOutcome {
    std::vector<ScalingRow> rows;
    double slope = 0; // log-log slope of median engine_size against n
};

// One engine run per (n, seed); the seed feeds both the instance (when the
// family is random) and the engine. Rows come out in (n, seed) order.
ScalingOutcome run_scaling(int r, int s, int alpha, const std::vector<int>& ns, int seeds,
                           InstanceFamily family, const EngineConfig& base_cfg = {});

// Least-squares slope of y against x.
double fit_slope(const std::vector<std::pair<double, double>>& points);

std::string scaling_csv_header();
std::string scaling_row_csv(const ScalingRow& row);

} // namespace fewcol

#endif // FEWCOL_EXPERIMENT_HPP
