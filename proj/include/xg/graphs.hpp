#pragma once

// Construction of the graph families KG(n,k), SG(n,k), XG(n,k) and the
// interlacing-edge subgraph, with canonical vertex order (lexicographic on
// ascending element tuples) for reproducible exports and solver runs.

#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_map>

#include "xg/alternator.hpp"
#include "xg/cyclic.hpp"

namespace xg {

// Simple undirected graph with stable labels, neighbour lists and a packed
// adjacency matrix. Immutable in spirit once built.
struct LabeledGraph {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> adj;
    std::vector<std::uint64_t> matrix;  // row-major bitset, words_per_row per vertex
    int words_per_row = 0;
    int num_edges = 0;

    LabeledGraph() = default;

    explicit LabeledGraph(std::vector<std::string> labels_)
        : labels(std::move(labels_)), adj(labels.size()) {
        words_per_row = static_cast<int>((labels.size() + 63) / 64);
        matrix.assign(labels.size() * words_per_row, 0);
    }

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int edge_count() const { return num_edges; }

    const std::uint64_t* row(int v) const { return matrix.data() + v * words_per_row; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
        if (has_edge(u, v)) return;
        matrix[u * words_per_row + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        matrix[v * words_per_row + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++num_edges;
    }

    void finalize() {
        for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    // Edges as index pairs u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(num_edges);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    LabeledGraph without_edge(int u, int v) const {
        LabeledGraph h(labels);
        for (const auto& [x, y] : edge_list())
            if (!(x == std::min(u, v) && y == std::max(u, v))) h.add_edge(x, y);
        h.finalize();
        return h;
    }
};

enum class Family { kneser, schrijver, xg, interlacing };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::kneser: return "kneser";
        case Family::schrijver: return "schrijver";
        case Family::xg: return "xg";
        case Family::interlacing: return "interlacing";
    }
    return "?";
}

// A family graph whose vertices are k-subsets of [n]. XG graphs also carry
// the standard alternator of every edge, aligned with edge_list().
struct SubsetGraph {
    GroundSet ground;
    Family family;
    std::vector<Vertex> vertices;  // canonical order
    LabeledGraph graph;
    std::unordered_map<Mask, int> index_of;
    std::vector<Alternator> edge_alternators;  // family == xg only

    int find_vertex(Mask m) const {
        auto it = index_of.find(m);
        return it == index_of.end() ? -1 : it->second;
    }

    const Alternator& alternator_of_edge(std::size_t edge_idx) const {
        return edge_alternators.at(edge_idx);
    }
};

// All k-subsets of [n] in lexicographic order of their ascending tuples.
inline std::vector<Vertex> kneser_vertices(const GroundSet& g) {
    std::vector<Vertex> out;
    std::vector<int> c(g.k);
    for (int i = 0; i < g.k; ++i) c[i] = i + 1;
    while (true) {
        Mask m = 0;
        for (int e : c) m |= element_bit(e);
        out.push_back(Vertex{m});
        int i = g.k - 1;
        while (i >= 0 && c[i] == g.n - g.k + 1 + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < g.k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

inline std::vector<Vertex> schrijver_vertices(const GroundSet& g) {
    std::vector<Vertex> out;
    for (Vertex v : kneser_vertices(g))
        if (is_independent_in_cycle(v.bits, g.n)) out.push_back(v);
    return out;
}

namespace detail {

inline SubsetGraph build_subset_graph(const GroundSet& g, Family family) {
    SubsetGraph sg{g, family, {}, {}, {}, {}};
    sg.vertices = family == Family::kneser ? kneser_vertices(g) : schrijver_vertices(g);

    std::vector<std::string> labels;
    labels.reserve(sg.vertices.size());
    for (const Vertex& v : sg.vertices) labels.push_back(format_set(v.bits));
    sg.graph = LabeledGraph(std::move(labels));

    for (std::size_t i = 0; i < sg.vertices.size(); ++i)
        sg.index_of.emplace(sg.vertices[i].bits, static_cast<int>(i));

    const int nv = static_cast<int>(sg.vertices.size());
    std::vector<std::tuple<int, int, Alternator>> xg_edges;
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            Mask a = sg.vertices[i].bits, b = sg.vertices[j].bits;
            if (a & b) continue;
            switch (family) {
                case Family::kneser:
                case Family::schrijver:
                    sg.graph.add_edge(i, j);
                    break;
                case Family::interlacing:
                    if (is_interlacing(a, b, g)) sg.graph.add_edge(i, j);
                    break;
                case Family::xg: {
                    auto alt = find_standard_alternator(sg.vertices[i], sg.vertices[j], g);
                    if (alt) {
                        sg.graph.add_edge(i, j);
                        xg_edges.emplace_back(i, j, std::move(*alt));
                    }
                    break;
                }
            }
        }
    }
    sg.graph.finalize();

    if (family == Family::xg) {
        // Align certificates with edge_list() order (u < v lexicographic),
        // which matches the generation order above.
        std::sort(xg_edges.begin(), xg_edges.end(), [](const auto& p, const auto& q) {
            return std::pair{std::get<0>(p), std::get<1>(p)} <
                   std::pair{std::get<0>(q), std::get<1>(q)};
        });
        sg.edge_alternators.reserve(xg_edges.size());
        for (auto& [u, v, alt] : xg_edges) sg.edge_alternators.push_back(std::move(alt));
    }
    return sg;
}

}  // namespace detail

inline SubsetGraph kneser_graph(const GroundSet& g) {
    return detail::build_subset_graph(g, Family::kneser);
}

inline SubsetGraph schrijver_graph(const GroundSet& g) {
    return detail::build_subset_graph(g, Family::schrijver);
}

inline SubsetGraph xg_graph(const GroundSet& g) {
    return detail::build_subset_graph(g, Family::xg);
}

inline SubsetGraph interlacing_subgraph(const GroundSet& g) {
    return detail::build_subset_graph(g, Family::interlacing);
}

}  // namespace xg
