#include <gtest/gtest.h>

#include "orbitcalc/duality.hpp"
#include "orbitcalc/waldspurger.hpp"

namespace {

using namespace orbitcalc;
using P = Partition;
using V = std::vector<int>;

TEST(Xi, Examples) {
    const XiVector a = xi_vector(P{3}, P{1, 1, 1}, PairType::BB);
    EXPECT_EQ(a.entries, (V{-1, 0, 0}));
    EXPECT_EQ(a.j_minus, (V{1}));
    EXPECT_TRUE(a.j_plus.empty());

    const XiVector b = xi_vector(P{1, 1, 1}, P{1, 1, 1}, PairType::BB);
    EXPECT_EQ(b.entries, (V{0, 0, -1}));
    EXPECT_EQ(b.j_minus, (V{3}));

    const XiVector c = xi_vector(P{1}, P{1}, PairType::BB);
    EXPECT_EQ(c.entries, (V{-1}));
    EXPECT_EQ(c.j_minus, (V{1}));
}

TEST(Waldspurger, Examples) {
    EXPECT_EQ(waldspurger(P{3, 3, 3}, P{1, 1, 1}, PairType::BB), (P{4, 4, 3}));
    EXPECT_EQ(waldspurger(P{3}, P{1, 1, 1}, PairType::BB), (P{3, 1, 1}));
    EXPECT_EQ(waldspurger(P{1, 1, 1}, P{1, 1, 1}, PairType::BB), (P{2, 2, 1}));
}

TEST(Waldspurger, DimensionCrossChecks) {
    EXPECT_EQ(orbit_dim(P{3, 1, 1}, GroupType::B), 2 + 0 + 10 - 3 - 3);
    EXPECT_EQ(orbit_dim(P{2, 2, 1}, GroupType::B), 0 + 0 + 10 - 3 - 3);
}

TEST(Waldspurger, OtherPairTypes) {
    const WaldspurgerResult cd = waldspurger_full(P{2}, P{1, 1}, PairType::CD);
    EXPECT_EQ(cd.type, GroupType::C);
    EXPECT_EQ(cd.partition.size(), 4);
    EXPECT_EQ(cd.xi.sum(), 0);
    EXPECT_TRUE(is_member(cd.partition, GroupType::C));

    const WaldspurgerResult dd = waldspurger_full(P{3, 1}, P{1, 1}, PairType::DD);
    EXPECT_EQ(dd.type, GroupType::D);
    EXPECT_EQ(dd.partition.size(), 6);
    EXPECT_EQ(dd.xi.sum(), 0);
    EXPECT_TRUE(is_member(dd.partition, GroupType::D));
}

TEST(Waldspurger, EmptyFactor) {
    EXPECT_EQ(waldspurger(P{}, P{3, 1}, PairType::CD), (P{4}));
    EXPECT_EQ(waldspurger(P{}, P{}, PairType::DD), P{});
}

TEST(Waldspurger, RejectsBadFactors) {
    EXPECT_THROW(waldspurger(P{2, 2, 1}, P{1}, PairType::BB), InputError);  // not special
    EXPECT_THROW(waldspurger(P{2, 2}, P{1}, PairType::BB), InputError);     // wrong parity
    EXPECT_THROW(waldspurger(P{3, 1}, P{2}, PairType::CD), InputError);     // not symplectic
    EXPECT_THROW(parse_pair_type("BC"), InputError);
}

TEST(PairTypes, Table) {
    EXPECT_EQ(info(PairType::CD).first, GroupType::C);
    EXPECT_EQ(info(PairType::CD).second, GroupType::D);
    EXPECT_EQ(info(PairType::CD).target, GroupType::C);
    EXPECT_EQ(target_size(PairType::BB, 3, 3), 5);
    EXPECT_EQ(target_size(PairType::DD, 4, 2), 6);
}

}  // namespace
