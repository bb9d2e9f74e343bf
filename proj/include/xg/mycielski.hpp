#pragma once

// Generalised Mycielski construction M_r(G), towers built from K_2, and the
// level map from M_k(XG(n-1,k)) into XG(n,k) together with an edge
// preservation verifier.

#include <span>

#include "xg/graphs.hpp"

namespace xg {

// M_r(G): vertex set (V x [0,r-1]) u {z}. Copy j of base vertex u sits at
// index j*|V| + u; the apex z is the last index.
struct MycielskiGraph {
    LabeledGraph graph;
    int base_count = 0;
    int rounds = 0;

    int index_of(int base_vertex, int level) const {
        return level * base_count + base_vertex;
    }
    int apex_index() const { return rounds * base_count; }
    int level_of(int idx) const { return idx == apex_index() ? -1 : idx / base_count; }
    int base_of(int idx) const { return idx == apex_index() ? -1 : idx % base_count; }
};

inline MycielskiGraph mycielski(const LabeledGraph& base, int r) {
    if (r < 1) throw std::invalid_argument("mycielski: r must be positive");
    const int nb = base.vertex_count();

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(r) * nb + 1);
    for (int j = 0; j < r; ++j)
        for (int u = 0; u < nb; ++u)
            labels.push_back("(" + base.labels[u] + "," + std::to_string(j) + ")");
    labels.push_back("Z");

    MycielskiGraph m{LabeledGraph(std::move(labels)), nb, r};
    for (const auto& [u, v] : base.edge_list()) {
        m.graph.add_edge(m.index_of(u, 0), m.index_of(v, 0));
        for (int i = 0; i + 1 < r; ++i) {
            m.graph.add_edge(m.index_of(u, i), m.index_of(v, i + 1));
            m.graph.add_edge(m.index_of(v, i), m.index_of(u, i + 1));
        }
    }
    for (int u = 0; u < nb; ++u)
        m.graph.add_edge(m.index_of(u, r - 1), m.apex_index());
    m.graph.finalize();
    return m;
}

// Member of the family obtained from K_2 by t-2 iterations of M_r, with the
// radii applied left to right.
inline LabeledGraph mycielski_tower(int t, std::span<const int> radii) {
    if (t < 2) throw std::invalid_argument("mycielski_tower: t must be at least 2");
    if (static_cast<int>(radii.size()) != t - 2)
        throw std::invalid_argument("mycielski_tower: expected t-2 radii");
    LabeledGraph g(std::vector<std::string>{"0", "1"});
    g.add_edge(0, 1);
    g.finalize();
    for (int r : radii) g = mycielski(g, r).graph;
    return g;
}

// Lambda_{n,i}: the i-element independent "fan" used by the level map.
inline Mask lambda_set(int n, int i) {
    if (i < 0 || 2 * i > n)
        throw std::invalid_argument("lambda_set: need 0 <= i <= n/2");
    Mask m = 0;
    if (i % 2 == 1) {
        for (int e = n - i + 1; e <= n; e += 2) m |= element_bit(e);
        for (int e = 2; e <= i - 1; e += 2) m |= element_bit(e);
    } else {
        for (int e = n - i + 1; e <= n - 1; e += 2) m |= element_bit(e);
        for (int e = 1; e <= i - 1; e += 2) m |= element_bit(e);
    }
    return m;
}

// A^j = [d,j]_A with d maximal such that the interval holds exactly j
// elements of A: the j elements of A closest to j counterclockwise.
inline Mask prefix_set(Vertex a, int j, const GroundSet& g) {
    if (j < 0 || j > g.k) throw std::invalid_argument("prefix_set: need 0 <= j <= k");
    if (j == 0) return 0;
    int best_d = -1;
    for (int d = 1; d <= g.n; ++d)
        if (count_in(d, j, Openness::closed, a.bits, g) == j) best_d = d;
    if (best_d < 0) throw std::logic_error("prefix_set: no admissible interval start");
    return interval_mask(best_d, j, Openness::closed, g) & a.bits;
}

// The explicit vertex map f from M_k(XG(n-1,k)) to XG(n,k):
//   (A,j) -> (A \ A^j) u Lambda_{n,j}   for 0 <= j <= k-1,
//   Z     -> Lambda_{n,k}.
struct LevelHomomorphism {
    GroundSet source_ground;
    GroundSet target_ground;
    SubsetGraph source_base;   // XG(n-1,k)
    MycielskiGraph source;     // M_k(XG(n-1,k))
    SubsetGraph target;        // XG(n,k)
    std::vector<int> map;      // source vertex index -> target vertex index

    Mask image_set(int source_idx) const {
        return target.vertices[map[source_idx]].bits;
    }
};

inline Mask level_map_image(Vertex a, int j, const GroundSet& source_g, int target_n) {
    return (a.bits & ~prefix_set(a, j, source_g)) | lambda_set(target_n, j);
}

inline LevelHomomorphism homomorphism_f(const GroundSet& target_g) {
    if (target_g.n < 2 * target_g.k + 1)
        throw std::invalid_argument("homomorphism_f: need n >= 2k+1");
    GroundSet source_g(target_g.n - 1, target_g.k);

    LevelHomomorphism h{source_g,
                        target_g,
                        xg_graph(source_g),
                        {},
                        xg_graph(target_g),
                        {}};
    h.source = mycielski(h.source_base.graph, target_g.k);

    h.map.assign(h.source.graph.vertex_count(), -1);
    auto assign = [&](int src_idx, Mask image) {
        if (!is_valid_vertex(image, target_g))
            throw std::logic_error("homomorphism_f: image " + format_set(image) +
                                   " is not a vertex of the target");
        int t = h.target.find_vertex(image);
        if (t < 0) throw std::logic_error("homomorphism_f: image vertex not found");
        h.map[src_idx] = t;
    };

    for (int j = 0; j < target_g.k; ++j)
        for (std::size_t u = 0; u < h.source_base.vertices.size(); ++u)
            assign(h.source.index_of(static_cast<int>(u), j),
                   level_map_image(h.source_base.vertices[u], j, source_g, target_g.n));
    assign(h.source.apex_index(), lambda_set(target_g.n, target_g.k));
    return h;
}

struct HomViolation {
    int source_u = 0;
    int source_v = 0;
};

// Checks that every source edge maps to a target edge; empty result means
// the map is a homomorphism.
inline std::vector<HomViolation> verify_homomorphism(const LabeledGraph& source,
                                                     const LabeledGraph& target,
                                                     std::span<const int> map) {
    if (static_cast<int>(map.size()) != source.vertex_count())
        throw std::invalid_argument("verify_homomorphism: map must be total");
    for (int m : map)
        if (m < 0 || m >= target.vertex_count())
            throw std::invalid_argument("verify_homomorphism: image outside target");
    std::vector<HomViolation> bad;
    for (const auto& [u, v] : source.edge_list())
        if (map[u] == map[v] || !target.has_edge(map[u], map[v]))
            bad.push_back({u, v});
    return bad;
}

}  // namespace xg
