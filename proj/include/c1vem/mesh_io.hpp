#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mesh.hpp"

namespace c1vem {

/// Mesh file layout:
/// {
///   "nodes":       [[x, y], ...],
///   "curves":      [{"id", "type", "params", "t_range"}, ...],
///   "elements":    [[v0, v1, ...], ...]        (CCW),
///   "edge_curves": [{"element", "local_edge", "curve", "t0", "t1"}, ...]
/// }
/// edge_curves entries are traversal-relative: t0 belongs to the local edge's
/// start vertex.  Both elements of an interior curved edge declare it.

inline nlohmann::ordered_json mesh_to_json(const CurvedMesh& mesh) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const Vec2& p : mesh.nodes) j["nodes"].push_back({p.x(), p.y()});
    j["curves"] = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < mesh.curves.size(); ++c) {
        const Curve& cu = mesh.curves[c];
        j["curves"].push_back({{"id", c},
                               {"type", cu.kind},
                               {"params", cu.params},
                               {"t_range", {cu.t_begin, cu.t_end}}});
    }
    j["elements"] = nlohmann::ordered_json::array();
    for (const auto& el : mesh.elements) j["elements"].push_back(el.verts);
    j["edge_curves"] = nlohmann::ordered_json::array();
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const MeshElement& el = mesh.elements[e];
        for (int i = 0; i < el.n_edges(); ++i) {
            const MeshEdge& ed = mesh.edges[el.edges[i]];
            if (ed.curve < 0) continue;
            const double ts = el.forward[i] ? ed.t0 : ed.t1;
            const double te = el.forward[i] ? ed.t1 : ed.t0;
            j["edge_curves"].push_back({{"element", e},
                                        {"local_edge", i},
                                        {"curve", ed.curve},
                                        {"t0", ts},
                                        {"t1", te}});
        }
    }
    return j;
}

inline CurvedMesh mesh_from_json(const nlohmann::json& j) {
    std::vector<Vec2> nodes;
    for (const auto& n : j.at("nodes")) nodes.emplace_back(n.at(0).get<double>(), n.at(1).get<double>());
    std::vector<Curve> curves;
    if (j.contains("curves")) {
        curves.resize(j["curves"].size());
        for (const auto& c : j["curves"]) {
            const auto id = c.at("id").get<std::size_t>();
            if (id >= curves.size()) throw std::invalid_argument("curve ids must be 0..n-1");
            const auto tr = c.at("t_range");
            curves[id] = make_curve(c.at("type").get<std::string>(),
                                    c.at("params").get<std::vector<double>>(),
                                    tr.at(0).get<double>(), tr.at(1).get<double>());
        }
    }
    std::vector<std::vector<int>> loops;
    for (const auto& el : j.at("elements")) loops.push_back(el.get<std::vector<int>>());
    std::vector<CurvedEdgeSpec> specs;
    if (j.contains("edge_curves"))
        for (const auto& s : j["edge_curves"])
            specs.push_back({s.at("element").get<int>(), s.at("local_edge").get<int>(),
                             s.at("curve").get<int>(), s.at("t0").get<double>(),
                             s.at("t1").get<double>()});
    return build_mesh(std::move(nodes), std::move(curves), loops, specs);
}

inline void write_mesh(const CurvedMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << mesh_to_json(mesh).dump(1) << "\n";
}

inline CurvedMesh read_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return mesh_from_json(j);
}

}  // namespace c1vem
