#include "fewcol/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace fewcol {

using nlohmann::json;

json graph_to_json(const ColouredGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.colour});
    return json{{"n", g.vertex_count()}, {"r", g.colour_count()}, {"edges", std::move(edges)}};
}

ColouredGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected object with n, r, edges");
    std::vector<Edge> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("graph json: each edge must be [u, v, colour]");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return build_graph(j.at("n").get<int>(), j.at("r").get<int>(), edges);
}

json covering_to_json(const Covering& s) {
    json pieces = json::array();
    for (const MonoPiece& p : s.pieces) {
        json piece{{"vertices", p.vertices}};
        if (p.colour == kNoColour) piece["colour"] = nullptr;
        else piece["colour"] = p.colour;
        pieces.push_back(std::move(piece));
    }
    return json{{"pieces", std::move(pieces)}};
}

Covering covering_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pieces"))
        throw std::invalid_argument("covering json: expected object with pieces");
    Covering s;
    for (const json& piece : j.at("pieces")) {
        MonoPiece p;
        p.vertices = piece.at("vertices").get<std::vector<int>>();
        const json& colour = piece.at("colour");
        p.colour = colour.is_null() ? kNoColour : colour.get<int>();
        s.pieces.push_back(std::move(p));
    }
    return s;
}

json report_to_json(const CoverReport& rep) {
    json failures = json::array();
    for (const auto& [idx, why] : rep.failures) failures.push_back({idx, why});
    return json{{"valid", rep.valid},
                {"failures", std::move(failures)},
                {"colours_used", std::vector<int>(rep.colours_used.begin(), rep.colours_used.end())},
                {"uncovered", rep.uncovered.to_vector()}};
}

json construction_meta_to_json(const ConstructionOutput& out) {
    json phi = json::object();
    for (const PhiEntry& e : out.phi)
        phi["(" + std::to_string(e.layer) + "," + std::to_string(e.index) + ")"] = e.colour;
    json parts = json::object();
    for (const Part& p : out.parts) parts[p.name] = p.vertices.to_vector();
    json meta{{"case", out.case_id}, {"chi", out.chi}, {"phi", std::move(phi)},
              {"parts", std::move(parts)}};
    if (out.case_id == 3) meta["t"] = out.t;
    else meta["t"] = nullptr;
    if (out.case_id == 2) meta["k"] = out.k;
    else meta["k"] = nullptr;
    return meta;
}

json colouring_witness_to_json(const KneserHypergraph& kh, const std::vector<int>& witness) {
    json out = json::object();
    for (std::size_t i = 0; i < witness.size() && i < kh.vertices.size(); ++i) {
        std::string key;
        for (int c : kh.vertices[i].elements()) {
            if (!key.empty()) key += ",";
            key += std::to_string(c);
        }
        out[key] = witness[i];
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace fewcol
