// fewcol - construct extremal colourings, cover coloured graphs with few
// colours, and certify the results against exact oracles
#include "fewcol/constructions.hpp"
#include "fewcol/cover_engine.hpp"
#include "fewcol/experiment.hpp"
#include "fewcol/independence.hpp"
#include "fewcol/json_io.hpp"
#include "fewcol/kneser.hpp"
#include "fewcol/oracle.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace fewcol;
using nlohmann::json;

namespace {

int cmd_chi(int r, int s, int alpha, bool exact, std::int64_t budget) {
    json out;
    out["formula"] = chi_formula(r, s, alpha);
    if (exact) {
        const KneserHypergraph kh = build_kneser(r, s, alpha);
        const ChiExactResult res = chi_exact(kh, budget);
        out["exceeded"] = !res.chi.has_value();
        if (res.chi) {
            out["exact"] = *res.chi;
            out["witness"] = colouring_witness_to_json(kh, res.witness);
        } else {
            out["exact"] = nullptr;
            out["witness"] = nullptr;
        }
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_construct(int r, int s, int alpha, int n, const std::string& out_path,
                  const std::string& meta_path) {
    const ConstructionOutput out = construct_lower_bound(r, s, alpha, n);
    save_json_file(out_path, graph_to_json(out.graph));
    if (!meta_path.empty()) save_json_file(meta_path, construction_meta_to_json(out));
    json summary{{"case", out.case_id}, {"chi", out.chi}, {"n", n},
                 {"edges", out.graph.edge_count()}, {"graph", out_path}};
    if (!meta_path.empty()) summary["meta"] = meta_path;
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int cmd_cover(const std::string& in_path, int s, int alpha, std::uint64_t seed,
              double target_fraction, int min_piece, const std::string& out_path,
              const std::string& trace_path) {
    const ColouredGraph g = graph_from_json(load_json_file(in_path));
    EngineConfig cfg;
    cfg.rng_seed = seed;
    cfg.target_fraction = target_fraction;
    cfg.min_piece = min_piece;
    const CoverRunResult run = cover_few_colours(g, s, alpha, cfg);

    const json cover_json = covering_to_json(run.covering);
    if (!out_path.empty()) save_json_file(out_path, cover_json);
    else std::cout << cover_json.dump(2) << '\n';

    if (!trace_path.empty()) {
        json iterations = json::array();
        for (const EngineIteration& it : run.trace.iterations) {
            iterations.push_back({{"hyperedge", it.hyperedge},
                                  {"sizes", it.sizes},
                                  {"delta_before", it.delta_before},
                                  {"delta_after", it.delta_after},
                                  {"batch_size", it.batch_size},
                                  {"reached_target", it.reached_target}});
        }
        json filtered = nullptr;
        if (run.trace.final_colour_set >= 0) {
            const KneserHypergraph kh = build_kneser(g.colour_count(), s, alpha);
            filtered = kh.vertices[run.trace.final_colour_set].elements();
        }
        save_json_file(trace_path,
                       json{{"iterations", std::move(iterations)},
                            {"final_colour_set", run.trace.final_colour_set},
                            {"filtered_colours", std::move(filtered)},
                            {"singletons_added", run.trace.singletons_added},
                            {"stall_fallback", run.trace.stall_fallback}});
    }
    if (!out_path.empty()) {
        json summary{{"pieces", run.covering.pieces.size()},
                     {"colours_used", run.covering.colours_used()},
                     {"covering", out_path}};
        std::cout << summary.dump(2) << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& cover_path, int s) {
    const ColouredGraph g = graph_from_json(load_json_file(graph_path));
    const Covering cover = covering_from_json(load_json_file(cover_path));
    const CoverReport rep = validate_covering(g, cover, s);
    std::cout << report_to_json(rep).dump(2) << '\n';
    return rep.valid ? 0 : 1;
}

int cmd_oracle(const std::string& in_path, int s) {
    const ColouredGraph g = graph_from_json(load_json_file(in_path));
    const OracleResult res = min_cover_exact(g, s);
    std::cout << json{{"min_size", res.min_size}, {"witness", covering_to_json(res.witness)}}
                     .dump(2)
              << '\n';
    return 0;
}

int cmd_scaling(int r, int s, int alpha, const std::vector<int>& ns, int seeds,
                const std::string& family_name, const std::string& csv_path) {
    const InstanceFamily family = family_name == "lower-bound" ? InstanceFamily::lower_bound
                                                               : InstanceFamily::random_complete;
    const ScalingOutcome outcome = run_scaling(r, s, alpha, ns, seeds, family);

    if (!csv_path.empty()) {
        const bool fresh =
            !std::filesystem::exists(csv_path) || std::filesystem::file_size(csv_path) == 0;
        std::ofstream csv(csv_path, std::ios::app);
        if (!csv) throw std::runtime_error("cannot write " + csv_path);
        if (fresh) csv << scaling_csv_header() << '\n';
        for (const ScalingRow& row : outcome.rows) csv << scaling_row_csv(row) << '\n';
    }
    json out{{"r", r},
             {"s", s},
             {"alpha", alpha},
             {"family", family_name},
             {"runs", outcome.rows.size()},
             {"slope", outcome.slope}};
    if (!csv_path.empty()) out["csv"] = csv_path;
    std::cout << out.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"covering edge-coloured graphs with monochromatic paths of few colours"};
    app.require_subcommand(1);

    int r = 2, s = 1, alpha = 1, n = 0;
    bool exact = false;
    std::int64_t budget = 200'000'000;
    auto* chi = app.add_subcommand("chi", "chromatic number of the colour-set hypergraph");
    chi->add_option("--r", r, "number of colours")->required();
    chi->add_option("--s", s, "colour budget")->required();
    chi->add_option("--alpha", alpha, "independence bound")->required();
    chi->add_flag("--exact", exact, "also run the exact search");
    chi->add_option("--budget", budget, "search-node budget for the exact search");

    std::string out_path, meta_path;
    auto* construct = app.add_subcommand("construct", "build an extremal lower-bound instance");
    construct->add_option("--r", r)->required();
    construct->add_option("--s", s)->required();
    construct->add_option("--alpha", alpha)->required();
    construct->add_option("--n", n, "vertex count")->required();
    construct->add_option("--out", out_path, "graph JSON path")->required();
    construct->add_option("--meta", meta_path, "sidecar metadata JSON path");

    std::string in_path, cover_path, trace_path;
    std::uint64_t seed = 0;
    double target_fraction = 0.25;
    int min_piece = 2;
    auto* cover = app.add_subcommand("cover", "cover a graph using at most s colours");
    cover->add_option("--in", in_path, "graph JSON path")->required();
    cover->add_option("--s", s)->required();
    cover->add_option("--alpha", alpha)->required();
    cover->add_option("--seed", seed, "engine seed");
    cover->add_option("--target-fraction", target_fraction, "per-step removal goal");
    cover->add_option("--min-piece", min_piece, "shortest path worth keeping");
    cover->add_option("--out", cover_path, "covering JSON path (stdout when omitted)");
    cover->add_option("--trace", trace_path, "iteration trace JSON path");

    std::string graph_path;
    auto* verify = app.add_subcommand("verify", "validate a covering against a graph");
    verify->add_option("--graph", graph_path)->required();
    verify->add_option("--cover", cover_path)->required();
    verify->add_option("--s", s, "colour budget")->required();

    auto* oracle = app.add_subcommand("oracle", "exact minimum covering at small sizes");
    oracle->add_option("--in", in_path)->required();
    oracle->add_option("--s", s)->required();

    std::vector<int> ns;
    int seeds = 5;
    std::string family = "random", csv_path;
    auto* scaling = app.add_subcommand("scaling", "seeded engine runs over a size grid");
    scaling->add_option("--r", r)->required();
    scaling->add_option("--s", s)->required();
    scaling->add_option("--alpha", alpha)->required();
    scaling->add_option("--n", ns, "vertex counts")->required()->delimiter(',');
    scaling->add_option("--seeds", seeds, "seeds per size");
    scaling->add_option("--family", family, "random | lower-bound")
        ->check(CLI::IsMember({"random", "lower-bound"}));
    scaling->add_option("--csv", csv_path, "append rows to this CSV");

    CLI11_PARSE(app, argc, argv);

    try {
        if (chi->parsed()) return cmd_chi(r, s, alpha, exact, budget);
        if (construct->parsed()) return cmd_construct(r, s, alpha, n, out_path, meta_path);
        if (cover->parsed())
            return cmd_cover(in_path, s, alpha, seed, target_fraction, min_piece, cover_path,
                             trace_path);
        if (verify->parsed()) return cmd_verify(graph_path, cover_path, s);
        if (oracle->parsed()) return cmd_oracle(in_path, s);
        if (scaling->parsed()) return cmd_scaling(r, s, alpha, ns, seeds, family, csv_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
