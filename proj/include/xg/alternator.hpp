#pragma once

// Adjacency machinery for XG(n,k): admissible intervals, switching, the
// depth function, and the alternator-finding algorithm. A pair AB of
// disjoint vertices is an XG edge iff it admits an alternator C u D with
//   (1) 1 <= c_1 < ... < c_m <= k-1,
//   (2) k+1 <= d_m < ... < d_1 <= n,
//   (3) every [d_i,c_i] is AB-admissible,
//   (4) switching along ([d_i,c_i])_i turns AB into an interlacing pair.
// The standard alternator additionally has d_i + 1 in A u B for every i.

#include <algorithm>
#include <optional>
#include <span>
#include <string>

#include "xg/cyclic.hpp"

namespace xg {

struct ControlPair {
    int c = 0;
    int d = 0;

    friend auto operator<=>(const ControlPair&, const ControlPair&) = default;
};

struct Alternator {
    // Index order of the definition: c ascending, d descending.
    std::vector<ControlPair> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
    bool empty() const { return pairs.empty(); }

    Mask control_mask() const {
        Mask m = 0;
        for (const auto& p : pairs) m |= element_bit(p.c) | element_bit(p.d);
        return m;
    }

    friend bool operator==(const Alternator&, const Alternator&) = default;
};

// |[d,c]_A| = |[d,c]_B| = c, where c is the interval's end element. Defined
// for open variants the same way; the threshold stays the literal end value.
inline bool is_weakly_admissible(Mask a, Mask b, const CyclicInterval& I,
                                 const GroundSet& g) {
    if (a & b) throw std::invalid_argument("admissibility: sets must be disjoint");
    Mask m = interval_mask(I, g);
    int c = I.end;
    return std::popcount(m & a) == c && std::popcount(m & b) == c;
}

inline bool is_admissible(Mask a, Mask b, const CyclicInterval& I, const GroundSet& g) {
    return is_weakly_admissible(a, b, I, g) && !has_element(a | b, I.start) &&
           !has_element(a | b, I.end);
}

// Switching at [d,c]: both sets exchange their elements inside the interval.
inline std::pair<Mask, Mask> switch_at(Mask a, Mask b, const CyclicInterval& I,
                                       const GroundSet& g) {
    if (a & b) throw std::invalid_argument("switch_at: sets must be disjoint");
    Mask t = interval_mask(I, g) & (a | b);
    return {a ^ t, b ^ t};
}

inline std::pair<Mask, Mask> switch_along(Mask a, Mask b,
                                          std::span<const CyclicInterval> seq,
                                          const GroundSet& g) {
    for (const auto& I : seq) std::tie(a, b) = switch_at(a, b, I, g);
    return {a, b};
}

inline std::pair<Mask, Mask> switch_along(Mask a, Mask b, const Alternator& alt,
                                          const GroundSet& g) {
    for (const auto& p : alt.pairs)
        std::tie(a, b) = switch_at(a, b, {p.d, p.c, Openness::closed}, g);
    return {a, b};
}

// Depth of d in X: the unique c in [k-1] with |[d,c]_X| = c and c not in X,
// or the sentinel k when no such element exists. Requires d in [k,n].
inline int depth(Vertex x, int d, const GroundSet& g) {
    if (d < g.k || d > g.n)
        throw std::out_of_range("depth: d must lie in [k,n]");
    for (int c = 1; c <= g.k - 1; ++c) {
        if (has_element(x.bits, c)) continue;
        if (count_in(d, c, Openness::closed, x.bits, g) == c) return c;
    }
    return g.k;
}

// Checks conditions (1)-(4) above for a candidate pair sequence.
inline bool alternator_conditions_hold(Mask a, Mask b,
                                       std::span<const ControlPair> pairs,
                                       const GroundSet& g) {
    if (a & b) return false;
    int m = static_cast<int>(pairs.size());
    for (int i = 0; i < m; ++i) {
        const auto& p = pairs[i];
        if (p.c < 1 || p.c > g.k - 1) return false;                        // (1)
        if (p.d < g.k + 1 || p.d > g.n) return false;                      // (2)
        if (i > 0 && !(pairs[i - 1].c < p.c && pairs[i - 1].d > p.d)) return false;
        if (!is_admissible(a, b, {p.d, p.c, Openness::closed}, g)) return false;  // (3)
    }
    Mask sa = a, sb = b;
    for (const auto& p : pairs)
        std::tie(sa, sb) = switch_at(sa, sb, {p.d, p.c, Openness::closed}, g);
    return is_interlacing(sa, sb, g);                                      // (4)
}

inline bool is_standard(Mask a, Mask b, const Alternator& alt, const GroundSet& g) {
    Mask u = a | b;
    for (const auto& p : alt.pairs)
        if (!has_element(u, next_element(p.d, g.n))) return false;
    return true;
}

// The algorithm of the construction: D takes the largest element of every
// gap between same-side (A u B)-consecutive pairs inside the segment [k,n],
// each c_i is the depth of d_i in A, and the candidate is validated against
// all four alternator conditions. Returns the standard alternator of the
// edge, the empty alternator for an interlacing pair, or nothing when AB is
// not an edge of XG(n,k).
inline std::optional<Alternator> find_standard_alternator(Vertex a, Vertex b,
                                                          const GroundSet& g) {
    if (a.bits & b.bits)
        throw std::invalid_argument("find_standard_alternator: vertices intersect");
    if (is_interlacing(a.bits, b.bits, g)) return Alternator{};

    Mask u = a.bits | b.bits;
    std::vector<int> seg;  // elements of [k,n]_{A u B}, ascending
    for (int e : elements_of(u))
        if (e >= g.k) seg.push_back(e);

    std::vector<int> ds;  // descending after reversal
    for (std::size_t t = 0; t + 1 < seg.size(); ++t) {
        int x = seg[t], y = seg[t + 1];
        bool same_side = (has_element(a.bits, x) && has_element(a.bits, y)) ||
                         (has_element(b.bits, x) && has_element(b.bits, y));
        if (!same_side) continue;
        ds.push_back(y - 1);  // largest element of (x,y); y-1 > x since A,B independent
    }
    std::reverse(ds.begin(), ds.end());

    Alternator alt;
    for (int d : ds) {
        if (d < g.k + 1 || d > g.n) return std::nullopt;
        int c = depth(a, d, g);
        if (c == g.k) return std::nullopt;
        alt.pairs.push_back({c, d});
    }
    if (!alternator_conditions_hold(a.bits, b.bits, alt.pairs, g)) return std::nullopt;
    return alt;
}

inline bool is_xg_edge(Vertex a, Vertex b, const GroundSet& g) {
    return !(a.bits & b.bits) && find_standard_alternator(a, b, g).has_value();
}

// Brute-force oracle: every set C u D satisfying the alternator definition.
// Exponential in n; intended for small instances only.
inline std::vector<Alternator> enumerate_alternators(Vertex a, Vertex b,
                                                     const GroundSet& g) {
    if (a.bits & b.bits)
        throw std::invalid_argument("enumerate_alternators: vertices intersect");
    std::vector<Alternator> found;

    std::vector<int> c_pool, d_pool;
    for (int c = 1; c <= g.k - 1; ++c) c_pool.push_back(c);
    for (int d = g.k + 1; d <= g.n; ++d) d_pool.push_back(d);
    if (c_pool.size() + d_pool.size() > 26)
        throw std::invalid_argument("enumerate_alternators: instance too large for the oracle");

    const std::uint32_t c_lim = 1u << c_pool.size();
    const std::uint32_t d_lim = 1u << d_pool.size();
    for (std::uint32_t cm = 0; cm < c_lim; ++cm) {
        int m = std::popcount(cm);
        std::vector<int> cs;
        for (std::size_t i = 0; i < c_pool.size(); ++i)
            if (cm >> i & 1) cs.push_back(c_pool[i]);
        for (std::uint32_t dm = 0; dm < d_lim; ++dm) {
            if (std::popcount(dm) != m) continue;
            std::vector<int> dsc;
            for (std::size_t i = 0; i < d_pool.size(); ++i)
                if (dm >> i & 1) dsc.push_back(d_pool[i]);
            std::sort(dsc.rbegin(), dsc.rend());
            Alternator alt;
            for (int i = 0; i < m; ++i) alt.pairs.push_back({cs[i], dsc[i]});
            if (alternator_conditions_hold(a.bits, b.bits, alt.pairs, g))
                found.push_back(std::move(alt));
        }
    }
    return found;
}

// Closed form for k = 2: with A = {a1,a2}, B = {b1,b2} normalised so that
// a1 < a2, b1 < b2 and a1 < b1, the pair is an edge iff it interlaces
// (a1 < b1 < a2 < b2) or satisfies 1 < a1 < b1 < b2 < a2.
inline bool xg_edge_characterization_k2(Vertex a, Vertex b, const GroundSet& g) {
    if (g.k != 2) throw std::invalid_argument("k=2 characterization requires k = 2");
    if (a.bits & b.bits)
        throw std::invalid_argument("xg_edge_characterization_k2: vertices intersect");
    std::vector<int> av = elements_of(a.bits), bv = elements_of(b.bits);
    if (bv[0] < av[0]) std::swap(av, bv);
    int a1 = av[0], a2 = av[1], b1 = bv[0], b2 = bv[1];
    bool interlacing = a1 < b1 && b1 < a2 && a2 < b2;
    bool transverse = 1 < a1 && a1 < b1 && b1 < b2 && b2 < a2;
    return interlacing || transverse;
}

// External certificate record, 1-based throughout.
inline std::string format_alternator_record(Vertex a, Vertex b, const Alternator& alt,
                                            const GroundSet& g) {
    std::string s;
    s += "n " + std::to_string(g.n) + "\n";
    s += "k " + std::to_string(g.k) + "\n";
    auto elems = [](Mask m) {
        std::string t;
        for (int e : elements_of(m)) t += " " + std::to_string(e);
        return t;
    };
    s += "A" + elems(a.bits) + "\n";
    s += "B" + elems(b.bits) + "\n";
    s += "m " + std::to_string(alt.size()) + "\n";
    for (const auto& p : alt.pairs)
        s += "pair " + std::to_string(p.c) + " " + std::to_string(p.d) + "\n";
    return s;
}

}  // namespace xg
