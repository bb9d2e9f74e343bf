#include "xg/cyclic.hpp"

#include <gtest/gtest.h>

using namespace xg;

namespace {

GroundSet g8(8, 2);
GroundSet g16(16, 4);

Mask ms(std::initializer_list<int> es) {
    Mask m = 0;
    for (int e : es) m |= element_bit(e);
    return m;
}

TEST(GroundSet, ValidatesInvariants) {
    EXPECT_NO_THROW(GroundSet(4, 2));
    EXPECT_THROW(GroundSet(3, 2), std::invalid_argument);
    EXPECT_THROW(GroundSet(5, 0), std::invalid_argument);
    EXPECT_THROW(GroundSet(64, 4), std::invalid_argument);
}

TEST(Members, NoWraparound) {
    EXPECT_EQ(members({3, 5}, g8), (std::vector<int>{3, 4, 5}));
}

TEST(Members, Wraparound) {
    EXPECT_EQ(members({7, 2}, g8), (std::vector<int>{7, 8, 1, 2}));
}

TEST(Members, FullCycleFromEveryStart) {
    for (int a = 1; a <= 8; ++a) {
        int b = a == 1 ? 8 : a - 1;
        EXPECT_EQ(members({a, b}, g8).size(), 8u) << "start " << a;
    }
}

TEST(Members, DegenerateIntervals) {
    EXPECT_EQ(members({4, 4}, g8), (std::vector<int>{4}));
    EXPECT_TRUE(members({4, 4, Openness::open}, g8).empty());
    EXPECT_TRUE(members({4, 4, Openness::open_left}, g8).empty());
    EXPECT_TRUE(members({4, 4, Openness::open_right}, g8).empty());
    EXPECT_TRUE(members({4, 5, Openness::open}, g8).empty());
}

TEST(Members, EndpointOutOfRange) {
    EXPECT_THROW(members({0, 5}, g8), std::out_of_range);
    EXPECT_THROW(members({1, 9}, g8), std::out_of_range);
}

TEST(Restrict, ControlPairIntervalOfFigureOne) {
    // [11,2] meets A = {4,9,12,15} in exactly the two elements 12, 15.
    Mask a = ms({4, 9, 12, 15});
    EXPECT_EQ(restrict_to({11, 2}, a, g16), (std::vector<int>{12, 15}));
    Mask b = ms({6, 8, 13, 16});
    EXPECT_EQ(restrict_to({11, 2}, b, g16), (std::vector<int>{13, 16}));
}

TEST(Restrict, EmptySetAndUnion) {
    EXPECT_TRUE(restrict_to({3, 5}, 0, g8).empty());
    Mask u = ms({4, 9, 12, 15}) | ms({6, 8, 13, 16});
    EXPECT_EQ(restrict_to({7, 3}, u, g16), (std::vector<int>{8, 9, 12, 13, 15, 16}));
}

TEST(Restrict, PartitionProperty) {
    // |I ∩ X| + |I ∩ complement| = |I| for every interval and subset.
    GroundSet g(7, 2);
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b)
            for (Mask x = 0; x < (Mask{1} << 7); x += 13) {
                Mask in_range = x & g.all_mask();
                auto mem = members({a, b}, g);
                auto inside = restrict_to({a, b}, in_range, g);
                auto outside = restrict_to({a, b}, g.all_mask() & ~in_range, g);
                EXPECT_EQ(inside.size() + outside.size(), mem.size());
            }
}

TEST(ConsecutivePairs, Basic) {
    auto pairs = consecutive_pairs(ms({2, 5, 7}), g8);
    std::vector<std::pair<int, int>> expect{{2, 5}, {5, 7}, {7, 2}};
    EXPECT_EQ(pairs, expect);
}

TEST(ConsecutivePairs, FigureOneGaps) {
    Mask u = ms({4, 9, 12, 15}) | ms({6, 8, 13, 16});
    auto pairs = consecutive_pairs(u, g16);
    auto has = [&](int x, int y) {
        return std::find(pairs.begin(), pairs.end(), std::pair{x, y}) != pairs.end();
    };
    EXPECT_TRUE(has(6, 8));
    EXPECT_TRUE(has(9, 12));
}

TEST(ConsecutivePairs, FullGroundSet) {
    auto pairs = consecutive_pairs(g8.all_mask(), g8);
    ASSERT_EQ(pairs.size(), 8u);
    for (int i = 1; i <= 8; ++i)
        EXPECT_EQ(pairs[i - 1], (std::pair{i, i == 8 ? 1 : i + 1}));
}

TEST(ConsecutivePairs, CoversEveryElementOnce) {
    GroundSet g(9, 2);
    for (Mask x = 0; x < (Mask{1} << 9); x += 7) {
        if (set_size(x) < 2) {
            EXPECT_TRUE(consecutive_pairs(x, g).empty());
            continue;
        }
        auto pairs = consecutive_pairs(x, g);
        EXPECT_EQ(pairs.size(), static_cast<std::size_t>(set_size(x)));
        Mask firsts = 0, seconds = 0;
        for (auto [p, q] : pairs) {
            firsts |= element_bit(p);
            seconds |= element_bit(q);
        }
        EXPECT_EQ(firsts, x);
        EXPECT_EQ(seconds, x);
    }
}

TEST(Alternation, EvensOddsPattern) {
    EXPECT_TRUE(alternate_on(ms({1, 5}), ms({3, 7}), {1, 8}, g8));
}

TEST(Alternation, FigureOnePairBreaksOnFullScan) {
    EXPECT_FALSE(alternate_on(ms({4, 9, 12, 15}), ms({6, 8, 13, 16}), {1, 16}, g16));
}

TEST(Alternation, SymmetricInTheTwoSets) {
    GroundSet g(8, 2);
    for (Mask a = 0; a < (Mask{1} << 8); a += 5) {
        for (Mask b = 0; b < (Mask{1} << 8); b += 9) {
            if (a & b) continue;
            EXPECT_EQ(alternate_on(a, b, {3, 1}, g), alternate_on(b, a, {3, 1}, g));
        }
    }
}

TEST(Interlacing, Basic) {
    EXPECT_TRUE(is_interlacing(ms({1, 5}), ms({3, 7}), g8));
    EXPECT_TRUE(is_interlacing(ms({2, 5}), ms({3, 7}), g8));
    EXPECT_FALSE(is_interlacing(ms({4, 9, 12, 15}), ms({6, 8, 13, 16}), g16));
}

TEST(Interlacing, WrapClosureMatters) {
    // 1,2 adjacent opposite-side around the wrap: {1,5} vs {2,6} alternate;
    // {1,3} vs {5,7} fail only at the wrap pair 7 -> 1.
    EXPECT_TRUE(is_interlacing(ms({1, 5}), ms({2, 6}), g8));
    EXPECT_TRUE(alternate_on(ms({1, 3}), ms({5, 7}), {1, 8}, g8) ==
                false);  // 1,3 same side already
    EXPECT_FALSE(is_interlacing(ms({1, 3}), ms({5, 7}), g8));
}

TEST(Vertex, Validation) {
    EXPECT_NO_THROW(make_vertex({1, 3}, g8));
    EXPECT_THROW(make_vertex({1, 2}, g8), std::invalid_argument);  // adjacent
    EXPECT_THROW(make_vertex({1, 8}, g8), std::invalid_argument);  // wrap adjacent
    EXPECT_THROW(make_vertex({1}, g8), std::invalid_argument);     // wrong size
    EXPECT_THROW(make_vertex({1, 3, 5}, g8), std::invalid_argument);
}

}  // namespace
