#pragma once

// Arithmetic on the ground cycle C_n with elements [1..n] and wraparound
// n+1 = 1. Element sets are bitmasks (bit e-1 holds element e), so n is
// capped at 63. All public values are 1-based.

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xg {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundElements = 63;

struct GroundSet {
    int n = 0;  // cycle length
    int k = 0;  // subset size

    GroundSet(int n_, int k_) : n(n_), k(k_) {
        if (k < 1)
            throw std::invalid_argument("GroundSet: k must be at least 1");
        if (n < 2 * k)
            throw std::invalid_argument("GroundSet: n must be at least 2k");
        if (n > kMaxGroundElements)
            throw std::invalid_argument("GroundSet: n exceeds bitmask capacity (63)");
    }

    Mask all_mask() const { return (Mask{1} << n) - 1; }
};

inline constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }
inline constexpr bool has_element(Mask m, int e) { return (m >> (e - 1)) & 1; }
inline int set_size(Mask m) { return std::popcount(m); }

inline int next_element(int e, int n) { return e == n ? 1 : e + 1; }
inline int prev_element(int e, int n) { return e == 1 ? n : e - 1; }

inline void check_element(int e, const GroundSet& g) {
    if (e < 1 || e > g.n)
        throw std::out_of_range("element " + std::to_string(e) + " outside [1," +
                                std::to_string(g.n) + "]");
}

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    out.reserve(std::popcount(m));
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

inline Mask mask_from_elements(const std::vector<int>& elems, const GroundSet& g) {
    Mask m = 0;
    for (int e : elems) {
        check_element(e, g);
        if (has_element(m, e))
            throw std::invalid_argument("duplicate element " + std::to_string(e));
        m |= element_bit(e);
    }
    return m;
}

inline std::string format_set(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// Cyclic intervals

enum class Openness { closed, open, open_left, open_right };

// The arc from `start` clockwise to `end`, inclusive in its closed form.
// [a,a] is the singleton {a}; [a,a-1] is the full cycle. Open variants drop
// the excluded endpoint(s) from the closed member set, so (a,a] = [a,a) = {}.
struct CyclicInterval {
    int start = 1;
    int end = 1;
    Openness openness = Openness::closed;

    friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

namespace detail {
// bits for elements a..b, requires 1 <= a <= b <= 63
inline Mask linear_range_mask(int a, int b) {
    return (b == 64 ? ~Mask{0} : (Mask{1} << b) - 1) & ~((Mask{1} << (a - 1)) - 1);
}
}  // namespace detail

inline Mask interval_mask(int a, int b, Openness op, const GroundSet& g) {
    if (a < 1 || a > g.n || b < 1 || b > g.n)
        throw std::out_of_range("interval endpoint outside [1,n]");
    Mask m;
    if (a <= b)
        m = detail::linear_range_mask(a, b);
    else if (b + 1 == a)
        m = g.all_mask();
    else
        m = g.all_mask() ^ detail::linear_range_mask(b + 1, a - 1);
    if (op == Openness::open || op == Openness::open_left) m &= ~element_bit(a);
    if (op == Openness::open || op == Openness::open_right) m &= ~element_bit(b);
    return m;
}

inline Mask interval_mask(const CyclicInterval& I, const GroundSet& g) {
    return interval_mask(I.start, I.end, I.openness, g);
}

// Count of elements of X inside the interval.
inline int count_in(int a, int b, Openness op, Mask x, const GroundSet& g) {
    return std::popcount(interval_mask(a, b, op, g) & x);
}

// Walks the closed arc clockwise, invoking fn(e) for every member of the
// interval (openness respected).
template <typename Fn>
inline void for_each_member(const CyclicInterval& I, const GroundSet& g, Fn&& fn) {
    Mask m = interval_mask(I, g);
    if (!m) return;
    int e = I.start;
    for (int step = 0; step < g.n; ++step) {
        if (has_element(m, e)) fn(e);
        if (e == I.end) break;
        e = next_element(e, g.n);
    }
}

// Members of the interval in clockwise order from its start.
inline std::vector<int> members(const CyclicInterval& I, const GroundSet& g) {
    std::vector<int> out;
    for_each_member(I, g, [&](int e) { out.push_back(e); });
    return out;
}

// [a,b]_X: members of the interval lying in X, clockwise order preserved.
inline std::vector<int> restrict_to(const CyclicInterval& I, Mask x, const GroundSet& g) {
    std::vector<int> out;
    Mask m = interval_mask(I, g) & x;
    if (!m) return out;
    int e = I.start;
    for (int step = 0; step < g.n; ++step) {
        if (has_element(m, e)) out.push_back(e);
        if (e == I.end) break;
        e = next_element(e, g.n);
    }
    return out;
}

// All X-consecutive ordered pairs <a,b>: a,b in X distinct with no element of
// X strictly between them clockwise. Exactly |X| pairs when |X| >= 2; empty
// result when |X| < 2.
inline std::vector<std::pair<int, int>> consecutive_pairs(Mask x, const GroundSet& g) {
    std::vector<std::pair<int, int>> out;
    std::vector<int> es = elements_of(x);
    if (es.size() < 2) return out;
    for (std::size_t i = 0; i < es.size(); ++i)
        out.emplace_back(es[i], es[(i + 1) % es.size()]);
    return out;
}

// True iff the elements of A and B encountered along the interval alternate
// between the two sets. Wraparound between the interval's last and first
// member is not considered; use is_interlacing for the cyclic version.
inline bool alternate_on(Mask a, Mask b, const CyclicInterval& I, const GroundSet& g) {
    if (a & b) throw std::invalid_argument("alternate_on: sets must be disjoint");
    bool ok = true;
    int last = 0;  // 0 none, 1 in A, 2 in B
    for_each_member(I, g, [&](int e) {
        int side = has_element(a, e) ? 1 : has_element(b, e) ? 2 : 0;
        if (side == 0) return;
        if (side == last) ok = false;
        last = side;
    });
    return ok;
}

// True iff A and B alternate all the way around C_n (interlacing pair).
inline bool is_interlacing(Mask a, Mask b, const GroundSet& g) {
    if (a & b) throw std::invalid_argument("is_interlacing: sets must be disjoint");
    Mask u = a | b;
    int first = 0, last = 0;
    for (Mask m = u; m;) {
        int e = std::countr_zero(m) + 1;
        m &= m - 1;
        int side = has_element(a, e) ? 1 : 2;
        if (last == 0)
            first = side;
        else if (side == last)
            return false;
        last = side;
    }
    if (last != 0 && set_size(u) > 1 && last == first) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Vertices of SG(n,k): k-element subsets of [n] independent in C_n.

struct Vertex {
    Mask bits = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline bool is_independent_in_cycle(Mask m, int n) {
    Mask rot = ((m << 1) | (m >> (n - 1))) & ((Mask{1} << n) - 1);
    return (m & rot) == 0;
}

inline bool is_valid_vertex(Mask m, const GroundSet& g) {
    return (m & ~g.all_mask()) == 0 && set_size(m) == g.k &&
           is_independent_in_cycle(m, g.n);
}

inline Vertex make_vertex(const std::vector<int>& elems, const GroundSet& g) {
    Mask m = mask_from_elements(elems, g);
    if (set_size(m) != g.k)
        throw std::invalid_argument("vertex must have exactly k elements");
    if (!is_independent_in_cycle(m, g.n))
        throw std::invalid_argument("vertex " + format_set(m) +
                                    " is not independent in C_n");
    return Vertex{m};
}

}  // namespace xg
