#include <gtest/gtest.h>

#include "orbitcalc/oracles.hpp"
#include "orbitcalc/partition.hpp"

namespace {

using namespace orbitcalc;
using P = Partition;

TEST(Parse, ReadsAndSorts) {
    EXPECT_EQ(parse_partition("4,2,1"), (P{4, 2, 1}));
    EXPECT_EQ(parse_partition("1,2,4"), (P{4, 2, 1}));
    EXPECT_EQ(parse_partition(""), P{});
    EXPECT_EQ(parse_partition(" 3 , 1 "), (P{3, 1}));
}

TEST(Parse, RejectsBadTokens) {
    EXPECT_THROW(parse_partition("4,x"), InputError);
    EXPECT_THROW(parse_partition("4,,1"), InputError);
    EXPECT_THROW(parse_partition("4,0"), InputError);
    EXPECT_THROW(parse_partition("-1"), InputError);
    EXPECT_THROW(P({3, -1}), InputError);
}

TEST(Partition, Accessors) {
    const P l{4, 2, 1};
    EXPECT_EQ(l.size(), 7);
    EXPECT_EQ(l.length(), 3u);
    EXPECT_EQ(l.part(1), 4);
    EXPECT_EQ(l.part(4), 0);
    EXPECT_EQ(l.part(0), 0);
    EXPECT_EQ(l.to_string(), "4,2,1");
    EXPECT_EQ(P{}.to_string(), "");
    EXPECT_EQ((P{0, 2, 0}), (P{2}));
}

TEST(Transpose, Examples) {
    EXPECT_EQ(transpose(P{1, 1, 1}), (P{3}));
    EXPECT_EQ(transpose(P{4, 2, 1}), (P{3, 2, 1, 1}));
    EXPECT_EQ(transpose(P{}), P{});
}

TEST(Multiplicity, Examples) {
    EXPECT_EQ(multiplicity(P{2, 2, 1}, 2), 2);
    EXPECT_EQ(multiplicity(P{2, 2, 1}, 3), 0);
    EXPECT_EQ(multiplicity(P{4, 2, 1}, 1), 1);
}

TEST(Union, Examples) {
    EXPECT_EQ(multiset_union(P{3, 1}, P{2, 1}), (P{3, 2, 1, 1}));
    EXPECT_EQ(multiset_union(P{2, 2}, P{}), (P{2, 2}));
    EXPECT_EQ(multiset_union(P{3}, P{3}), (P{3, 3}));
}

TEST(Add, Examples) {
    EXPECT_EQ(add(P{3, 1}, P{2, 1}), (P{5, 2}));
    EXPECT_EQ(add(P{4, 2, 1}, P{}), (P{4, 2, 1}));
    EXPECT_EQ(add(P{2, 2}, P{1, 1, 1}), (P{3, 3, 1}));
}

TEST(Dominance, Examples) {
    EXPECT_TRUE(dominance_leq(P{2, 2}, P{3, 1}));
    EXPECT_FALSE(dominance_leq(P{3, 3}, P{4, 1, 1}));
    EXPECT_FALSE(dominance_leq(P{4, 1, 1}, P{3, 3}));
    EXPECT_TRUE(dominance_leq(P{4, 1, 1}, P{4, 1, 1}));
    EXPECT_THROW(dominance_leq(P{2}, P{1}), InputError);
}

TEST(Classify, Examples) {
    const auto a = classify(P{3, 3, 1}, GroupType::B);
    EXPECT_TRUE(a.member);
    EXPECT_TRUE(a.special);
    const auto b = classify(P{2, 2, 1}, GroupType::B);
    EXPECT_TRUE(b.member);
    EXPECT_FALSE(b.special);
    const auto c = classify(P{2, 1, 1}, GroupType::C);
    EXPECT_TRUE(c.member);
    EXPECT_FALSE(c.special);
    EXPECT_FALSE(classify(P{3, 1}, GroupType::C).member);
    EXPECT_TRUE(classify(P{2, 2}, GroupType::D).very_even);
    EXPECT_THROW(classify(P{2, 2}, GroupType::B), InputError);
}

TEST(Collapse, Examples) {
    EXPECT_EQ(collapse(P{4, 2, 1}, GroupType::B), (P{3, 3, 1}));
    EXPECT_EQ(collapse(P{3, 2, 1}, GroupType::C), (P{2, 2, 2}));
    EXPECT_EQ(collapse(P{3, 1}, GroupType::D), (P{3, 1}));
    EXPECT_THROW(collapse(P{3, 1}, GroupType::B), InputError);
}

TEST(Collapse, AgreesWithBruteForceOnSmallSizes) {
    for (GroupType t : {GroupType::B, GroupType::C, GroupType::D}) {
        for (int d = 0; d <= 9; ++d) {
            if (!parity_matches(d, t)) continue;
            for (const auto& l : enumerate_partitions(d)) {
                EXPECT_EQ(collapse(l, t), oracle::brute_force_collapse(l, t)) << l.to_string();
            }
        }
    }
}

TEST(BruteForceCollapse, Examples) {
    EXPECT_EQ(oracle::brute_force_collapse(P{4, 2, 1}, GroupType::B), (P{3, 3, 1}));
    EXPECT_EQ(oracle::brute_force_collapse(P{3, 2, 1}, GroupType::C), (P{2, 2, 2}));
    EXPECT_EQ(oracle::brute_force_collapse(P{3, 3, 1}, GroupType::B), (P{3, 3, 1}));
}

TEST(Enumerate, Examples) {
    EXPECT_EQ(enumerate(4, GroupType::C, false), (std::vector<P>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
    EXPECT_EQ(enumerate(5, GroupType::B, true), (std::vector<P>{{5}, {3, 1, 1}, {1, 1, 1, 1, 1}}));
    EXPECT_EQ(enumerate(0, GroupType::D, true), (std::vector<P>{P{}}));
    EXPECT_THROW(enumerate(3, GroupType::C, false), InputError);
}

TEST(Enumerate, PartitionCounts) {
    const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int d = 0; d <= 10; ++d) EXPECT_EQ(enumerate_partitions(d).size(), counts[static_cast<std::size_t>(d)]);
}

}  // namespace
