#pragma once

// File formats: DIMACS edge lists, a versioned JSON graph schema, the
// criticality certificate file and homomorphism tables. All indices and
// elements are 1-based on disk.

#include <istream>
#include <ostream>

#include <json.hpp>

#include "xg/coloring.hpp"
#include "xg/graphs.hpp"
#include "xg/mycielski.hpp"

namespace xg {

inline constexpr int kJsonSchemaVersion = 1;

inline void export_dimacs(const LabeledGraph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edge_list()) out << "e " << u + 1 << " " << v + 1 << "\n";
    if (!out) throw std::runtime_error("export_dimacs: write failure");
}

inline nlohmann::json graph_to_json(const LabeledGraph& g) {
    nlohmann::json j;
    j["version"] = kJsonSchemaVersion;
    j["labels"] = g.labels;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edge_list())
        edges.push_back(nlohmann::json::array({u + 1, v + 1}));
    j["edges"] = std::move(edges);
    return j;
}

inline nlohmann::json graph_to_json(const SubsetGraph& sg) {
    nlohmann::json j = graph_to_json(sg.graph);
    j["family"] = family_name(sg.family);
    j["n"] = sg.ground.n;
    j["k"] = sg.ground.k;
    nlohmann::json verts = nlohmann::json::array();
    for (const Vertex& v : sg.vertices) verts.push_back(elements_of(v.bits));
    j["vertices"] = std::move(verts);
    if (sg.family == Family::xg) {
        nlohmann::json alts = nlohmann::json::array();
        auto edges = sg.graph.edge_list();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            nlohmann::json rec;
            rec["edge"] = {edges[e].first + 1, edges[e].second + 1};
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto& p : sg.edge_alternators[e].pairs)
                pairs.push_back(nlohmann::json::array({p.c, p.d}));
            rec["pairs"] = std::move(pairs);
            alts.push_back(std::move(rec));
        }
        j["alternators"] = std::move(alts);
    }
    return j;
}

template <typename Graph>
inline void export_json(const Graph& g, std::ostream& out) {
    out << graph_to_json(g).dump(2) << "\n";
    if (!out) throw std::runtime_error("export_json: write failure");
}

inline LabeledGraph import_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kJsonSchemaVersion)
        throw std::runtime_error("import_json: unsupported schema version");
    LabeledGraph g(j.at("labels").get<std::vector<std::string>>());
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
    g.finalize();
    return g;
}

// Certificate for a verify-critical run. The generated_at header line is the
// only nondeterministic part of the file.
inline nlohmann::json criticality_report_to_json(const CriticalityReport& rep,
                                                 const SubsetGraph& xg,
                                                 const std::string& generated_at) {
    nlohmann::json j;
    j["version"] = kJsonSchemaVersion;
    j["generated_at"] = generated_at;
    j["family"] = "xg";
    j["n"] = rep.g.n;
    j["k"] = rep.g.k;
    j["palette_limit"] = rep.g.n - 2 * rep.g.k + 1;
    j["seed"] = rep.seed;
    j["sample_size"] = rep.sample_size;
    j["edges_checked"] = rep.edges_checked;
    j["cross_checked"] = rep.cross_checked;
    j["verdict"] = rep.all_pass ? "pass" : "fail";
    j["budget_hit"] = rep.budget_hit;

    nlohmann::json edges = nlohmann::json::array();
    for (const EdgeCheck& chk : rep.per_edge) {
        nlohmann::json rec;
        rec["edge"] = {chk.u + 1, chk.v + 1};
        rec["a"] = elements_of(xg.vertices[chk.u].bits);
        rec["b"] = elements_of(xg.vertices[chk.v].bits);
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& p : chk.alt.pairs)
            pairs.push_back(nlohmann::json::array({p.c, p.d}));
        rec["alternator"] = std::move(pairs);
        rec["proper"] = chk.proper;
        rec["palette_used"] = chk.palette_used;
        rec["colors"] = chk.colors;
        rec["rules"] = chk.rules;
        if (chk.cross_checked) {
            if (chk.chi_minus_edge)
                rec["chi_minus_edge"] = *chk.chi_minus_edge;
            else
                rec["chi_minus_edge"] = nullptr;
        }
        if (!chk.violations.empty()) {
            nlohmann::json viol = nlohmann::json::array();
            for (auto [x, y] : chk.violations)
                viol.push_back(nlohmann::json::array({x + 1, y + 1}));
            rec["violations"] = std::move(viol);
        }
        edges.push_back(std::move(rec));
    }
    j["edges"] = std::move(edges);
    return j;
}

// Homomorphism table: source vertex label -> target element array.
inline nlohmann::json homomorphism_to_json(const LevelHomomorphism& h) {
    nlohmann::json j;
    j["version"] = kJsonSchemaVersion;
    j["n"] = h.target_ground.n;
    j["k"] = h.target_ground.k;
    j["source"] = "M_k(XG(n-1,k))";
    j["target"] = "XG(n,k)";
    nlohmann::json map = nlohmann::json::object();
    for (int s = 0; s < h.source.graph.vertex_count(); ++s)
        map[h.source.graph.labels[s]] = elements_of(h.image_set(s));
    j["map"] = std::move(map);
    return j;
}

}  // namespace xg
