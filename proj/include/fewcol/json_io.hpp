// json_io.hpp - interchange formats: graphs, coverings, construction
// metadata, validation reports
#ifndef FEWCOL_JSON_IO_HPP
#define FEWCOL_JSON_IO_HPP

#include "fewcol/constructions.hpp"
#include "fewcol/covering.hpp"
#include "fewcol/graph.hpp"
#include "fewcol/kneser.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace fewcol {

// {"n": int, "r": int, "edges": [[u, v, colour], ...]}
nlohmann::json graph_to_json(const ColouredGraph& g);
ColouredGraph graph_from_json(const nlohmann::json& j);

// {"pieces": [{"vertices": [...], "colour": int|null}, ...]}
nlohmann::json covering_to_json(const Covering& s);
Covering covering_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CoverReport& rep);

// {"case": int, "chi": int, "t": int|null, "k": [int]|null,
//  "phi": {"(i,j)": colour}, "parts": {"name": [vertices]}}
nlohmann::json construction_meta_to_json(const ConstructionOutput& out);

// {"1,3": colour, ...} keyed by the colour-set elements
nlohmann::json colouring_witness_to_json(const KneserHypergraph& kh,
                                         const std::vector<int>& witness);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

} // namespace fewcol

#endif // FEWCOL_JSON_IO_HPP
