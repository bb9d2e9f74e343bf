#pragma once

// Exact chromatic number via DSATUR branch and bound. The solver is
// deterministic: vertices are explored in canonical order, ties broken by
// degree then index, and colour symmetry is broken by allowing at most one
// previously unused colour at each branching point. A configurable node
// budget turns oversized instances into an explicit "unknown" outcome
// rather than a wrong answer.

#include <cstdint>
#include <numeric>

#include "xg/graphs.hpp"

namespace xg {

struct SolveOptions {
    std::uint64_t node_budget = 200'000'000;
    // Sound externally-proven lower bound (e.g. the exact chromatic number
    // of a subgraph). The search stops as soon as a colouring matching it
    // is found.
    int assumed_lower_bound = 1;
};

enum class SolveStatus { exact, budget_exceeded };

struct ChromaticResult {
    SolveStatus status = SolveStatus::exact;
    int chromatic_number = -1;  // meaningful only when status == exact
    int lower_bound = 1;
    int upper_bound = -1;       // colours in the best colouring found
    std::vector<int> coloring;  // witness using upper_bound colours, 0-based
    std::uint64_t nodes = 0;
};

namespace detail {

struct BudgetHit {};

inline constexpr std::uint64_t low_colors(int t) {
    return t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
}

inline int greedy_clique_bound(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair{-g.degree(a), a} < std::pair{-g.degree(b), b};
    });
    int best = 1;
    std::vector<std::uint64_t> cand(g.words_per_row);
    for (int seed : order) {
        if (g.degree(seed) + 1 <= best) break;  // order is by degree
        for (int w = 0; w < g.words_per_row; ++w) cand[w] = g.row(seed)[w];
        int size = 1;
        for (int v : order) {
            if (v == seed) continue;
            if (!((cand[v >> 6] >> (v & 63)) & 1)) continue;
            ++size;
            for (int w = 0; w < g.words_per_row; ++w) cand[w] &= g.row(v)[w];
        }
        best = std::max(best, size);
    }
    return best;
}

// Sequential greedy in the given vertex order; returns colour count.
inline int greedy_in_order(const LabeledGraph& g, const std::vector<int>& order,
                           std::vector<int>& colors) {
    colors.assign(g.vertex_count(), -1);
    int used = 0;
    for (int v : order) {
        std::uint64_t taken = 0;
        for (int w : g.adj[v])
            if (colors[w] >= 0 && colors[w] < 64) taken |= std::uint64_t{1} << colors[w];
        int c = std::countr_one(taken);
        if (c >= 64) throw std::runtime_error("solver: more than 63 colours needed");
        colors[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

inline int dsatur_greedy(const LabeledGraph& g, std::vector<int>& colors) {
    const int n = g.vertex_count();
    colors.assign(n, -1);
    std::vector<std::uint64_t> ncmask(n, 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colors[v] >= 0) continue;
            int sat = std::popcount(ncmask[v]);
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        int c = std::countr_one(ncmask[best]);
        if (c >= 64) throw std::runtime_error("solver: more than 63 colours needed");
        colors[best] = c;
        used = std::max(used, c + 1);
        for (int w : g.adj[best])
            if (colors[w] < 0) ncmask[w] |= std::uint64_t{1} << c;
    }
    return used;
}

// Induced core left after iteratively peeling vertices of degree < t.
struct PeeledCore {
    std::vector<int> core;        // original ids of surviving vertices
    std::vector<int> peel_order;  // removal order of peeled vertices
};

inline PeeledCore peel_low_degree(const LabeledGraph& g, int t) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    PeeledCore out;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (alive[v] && deg[v] < t) {
                alive[v] = 0;
                out.peel_order.push_back(v);
                for (int w : g.adj[v])
                    if (alive[w]) --deg[w];
                changed = true;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (alive[v]) out.core.push_back(v);
    return out;
}

class DecisionSearch {
  public:
    DecisionSearch(const LabeledGraph& g, const std::vector<int>& core, int t,
                   std::uint64_t budget, std::uint64_t& nodes)
        : g_(g), core_(core), t_(t), budget_(budget), nodes_(nodes) {
        const int m = static_cast<int>(core.size());
        local_id_.assign(g.vertex_count(), -1);
        for (int i = 0; i < m; ++i) local_id_[core[i]] = i;
        adj_.resize(m);
        for (int i = 0; i < m; ++i)
            for (int w : g.adj[core[i]])
                if (local_id_[w] >= 0) adj_[i].push_back(local_id_[w]);
        deg_.resize(m);
        for (int i = 0; i < m; ++i) deg_[i] = static_cast<int>(adj_[i].size());
        color_.assign(m, -1);
        ncmask_.assign(m, 0);
    }

    // Fills `colors` (indexed by local core id) on success.
    bool run(std::vector<int>& colors) {
        if (!dfs(0, 0)) return false;
        colors = color_;
        return true;
    }

  private:
    bool dfs(int colored, int used) {
        if (++nodes_ > budget_) throw BudgetHit{};
        const int m = static_cast<int>(core_.size());
        if (colored == m) return true;
        int v = -1, best_sat = -1, best_deg = -1;
        for (int i = 0; i < m; ++i) {
            if (color_[i] >= 0) continue;
            int sat = std::popcount(ncmask_[i]);
            if (sat > best_sat || (sat == best_sat && deg_[i] > best_deg)) {
                v = i;
                best_sat = sat;
                best_deg = deg_[i];
            }
        }
        std::uint64_t allowed = ~ncmask_[v] & low_colors(std::min(used + 1, t_));
        while (allowed) {
            int c = std::countr_zero(allowed);
            allowed &= allowed - 1;
            color_[v] = c;
            const std::size_t mark = undo_.size();
            for (int w : adj_[v]) {
                if (color_[w] < 0 && !(ncmask_[w] >> c & 1)) {
                    ncmask_[w] |= std::uint64_t{1} << c;
                    undo_.push_back(w);
                }
            }
            if (dfs(colored + 1, std::max(used, c + 1))) return true;
            while (undo_.size() > mark) {
                ncmask_[undo_.back()] &= ~(std::uint64_t{1} << c);
                undo_.pop_back();
            }
            color_[v] = -1;
        }
        return false;
    }

    const LabeledGraph& g_;
    const std::vector<int>& core_;
    int t_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<int> local_id_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> deg_;
    std::vector<int> color_;
    std::vector<std::uint64_t> ncmask_;
    std::vector<int> undo_;
};

enum class Decision { sat, unsat, budget };

// Decides t-colourability; on success extends the core colouring over the
// peeled vertices and writes a full colouring of g.
inline Decision t_colorable(const LabeledGraph& g, int t, std::uint64_t budget,
                            std::uint64_t& nodes, std::vector<int>& colors) {
    if (t <= 0) return g.vertex_count() == 0 ? Decision::sat : Decision::unsat;
    if (t >= 64) throw std::runtime_error("solver: colour limit exceeds 63");
    PeeledCore pc = peel_low_degree(g, t);

    std::vector<int> core_colors;
    if (!pc.core.empty()) {
        DecisionSearch search(g, pc.core, t, budget, nodes);
        bool ok;
        try {
            ok = search.run(core_colors);
        } catch (const BudgetHit&) {
            return Decision::budget;
        }
        if (!ok) return Decision::unsat;
    }

    colors.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < pc.core.size(); ++i) colors[pc.core[i]] = core_colors[i];
    for (auto it = pc.peel_order.rbegin(); it != pc.peel_order.rend(); ++it) {
        std::uint64_t taken = 0;
        for (int w : g.adj[*it])
            if (colors[w] >= 0) taken |= std::uint64_t{1} << colors[w];
        int c = std::countr_one(taken);
        colors[*it] = c;  // c < t since the vertex was peeled with degree < t
    }
    return Decision::sat;
}

}  // namespace detail

inline ChromaticResult chromatic_number(const LabeledGraph& g, SolveOptions opts = {}) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("chromatic_number: graph must be nonempty");

    ChromaticResult res;
    res.lower_bound = std::max(opts.assumed_lower_bound, detail::greedy_clique_bound(g));

    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> lex_colors, dsat_colors;
    int lex_used = detail::greedy_in_order(g, order, lex_colors);
    int dsat_used = detail::dsatur_greedy(g, dsat_colors);
    if (dsat_used <= lex_used) {
        res.upper_bound = dsat_used;
        res.coloring = std::move(dsat_colors);
    } else {
        res.upper_bound = lex_used;
        res.coloring = std::move(lex_colors);
    }

    while (res.upper_bound > res.lower_bound) {
        std::vector<int> attempt;
        auto verdict = detail::t_colorable(g, res.upper_bound - 1,
                                           opts.node_budget, res.nodes, attempt);
        if (verdict == detail::Decision::sat) {
            int used = 0;
            for (int c : attempt) used = std::max(used, c + 1);
            res.upper_bound = used;
            res.coloring = std::move(attempt);
        } else if (verdict == detail::Decision::unsat) {
            res.lower_bound = res.upper_bound;
        } else {
            res.status = SolveStatus::budget_exceeded;
            return res;
        }
    }
    res.status = SolveStatus::exact;
    res.chromatic_number = res.upper_bound;
    return res;
}

}  // namespace xg
