#include <gtest/gtest.h>

#include "orbitcalc/oracles.hpp"
#include "orbitcalc/symbols.hpp"

namespace {

using namespace orbitcalc;
using P = Partition;
using V = std::vector<int>;

Bipartition bc(V alpha, V beta) { return Bipartition{std::move(alpha), std::move(beta), false, Decoration::None}; }
Bipartition dd(V alpha, V beta) { return Bipartition{std::move(alpha), std::move(beta), true, Decoration::None}; }
Symbol sym(V top, V bottom, bool type_d = false) {
    return Symbol{std::move(top), std::move(bottom), type_d, Decoration::None};
}

TEST(SymbolOf, EntryFormula) {
    EXPECT_EQ(raw_symbol_of(bc({0, 0}, {1})), sym({0, 1}, {1}));
    EXPECT_EQ(raw_symbol_of(bc({0, 2}, {0})), sym({0, 3}, {0}));
    EXPECT_EQ(raw_symbol_of(bc({0}, {})), sym({0}, {}));
}

TEST(SymbolOf, CanonicalForm) {
    EXPECT_EQ(symbol_of(bc({0, 0}, {1})), sym({0, 1}, {1}));
    EXPECT_EQ(symbol_of(bc({0, 2}, {0})), sym({2}, {}));
    EXPECT_EQ(symbol_of(bc({0, 2}, {0})), normalize_symbol(sym({0, 3}, {0})));
    EXPECT_EQ(symbol_of(bc({0}, {})), sym({0}, {}));
    // Padding does not change the canonical symbol.
    EXPECT_EQ(symbol_of(bc({0, 0, 1}, {0, 1})), symbol_of(bc({0, 1}, {1})));
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize_symbol(sym({0, 1, 2, 3}, {0, 3, 4})), sym({0, 1, 2}, {2, 3}));
    EXPECT_EQ(normalize_symbol(sym({0, 1, 2}, {2, 3})), sym({0, 1, 2}, {2, 3}));
    EXPECT_EQ(normalize_symbol(sym({0, 1}, {0, 2}, true)), sym({0}, {1}, true));
}

TEST(Normalize, TypeDRowOrder) {
    EXPECT_EQ(normalize_symbol(sym({0}, {1}, true)), sym({0}, {1}, true));
    EXPECT_EQ(normalize_symbol(sym({1}, {0}, true)), sym({0}, {1}, true));
}

TEST(Normalize, RejectsMalformed) {
    EXPECT_THROW(normalize_symbol(sym({1, 1}, {0})), InputError);
    EXPECT_THROW(normalize_symbol(sym({1}, {0})), InputError);
}

TEST(Special, Examples) {
    EXPECT_TRUE(is_special_symbol(symbol_of(bc({0, 0}, {1}))));
    EXPECT_FALSE(is_special_symbol(sym({0, 1, 2}, {2, 3})));
    EXPECT_TRUE(is_special_symbol(symbol_of(bc({0}, {}))));
}

TEST(Family, Keys) {
    const Symbol a = symbol_of(bc({0, 1}, {1}));
    const Symbol b = symbol_of(bc({0, 2}, {0}));
    EXPECT_NE(family_key(a), family_key(b));
    EXPECT_EQ(family_key(a), family_key(sym({0, 1}, {2})));
    const Symbol raw = sym({0, 1, 2, 3}, {0, 3, 4});
    EXPECT_EQ(family_key(raw), family_key(normalize_symbol(raw)));
}

TEST(Family, DistinctSpecialsOfFiveAreInDistinctFamilies) {
    const auto specials = enumerate(5, GroupType::B, true);
    for (std::size_t i = 0; i < specials.size(); ++i) {
        for (std::size_t j = i + 1; j < specials.size(); ++j) {
            EXPECT_NE(family_key(symbol_of(springer_bipartition(specials[i], GroupType::B))),
                      family_key(symbol_of(springer_bipartition(specials[j], GroupType::B))));
        }
    }
}

TEST(PartitionOfSymbol, Examples) {
    EXPECT_EQ(partition_of_special_symbol(symbol_of(bc({0, 0}, {1})), GroupType::B), (P{1, 1, 1}));
    EXPECT_EQ(partition_of_special_symbol(symbol_of(bc({0, 1}, {1})), GroupType::B), (P{3, 1, 1}));
    EXPECT_EQ(partition_of_special_symbol(symbol_of(bc({0, 2}, {0})), GroupType::B), (P{5}));
    EXPECT_THROW(partition_of_special_symbol(sym({0, 1, 2}, {2, 3}), GroupType::B), InputError);
    EXPECT_THROW(partition_of_special_symbol(symbol_of(bc({0, 0}, {1})), GroupType::D), InputError);
}

TEST(Springer, Examples) {
    EXPECT_EQ(springer_bipartition(P{1, 1, 1}, GroupType::B), bc({0, 0}, {1}));
    EXPECT_EQ(springer_bipartition(P{3, 1, 1}, GroupType::B), bc({0, 1}, {1}));
    EXPECT_EQ(springer_bipartition(P{5}, GroupType::B), bc({0, 2}, {0}));
    EXPECT_THROW(springer_bipartition(P{2, 2, 1}, GroupType::B), InputError);
}

TEST(Springer, AgreesWithSearch) {
    for (GroupType t : {GroupType::B, GroupType::C, GroupType::D}) {
        for (int d = 0; d <= 9; ++d) {
            if (!parity_matches(d, t)) continue;
            for (const auto& l : enumerate(d, t, true)) {
                const auto found = oracle::search_springer_bipartition(l, t);
                ASSERT_TRUE(found.has_value()) << l.to_string();
                EXPECT_EQ(symbol_of(springer_bipartition(l, t)), symbol_of(*found)) << l.to_string();
            }
        }
    }
}

TEST(Springer, TypeCAndD) {
    const Bipartition c = springer_bipartition(P{2, 2}, GroupType::C);
    EXPECT_EQ(partition_of_special_symbol(symbol_of(c), GroupType::C), (P{2, 2}));
    const Bipartition d = springer_bipartition(P{3, 1}, GroupType::D);
    EXPECT_EQ(partition_of_special_symbol(symbol_of(d), GroupType::D), (P{3, 1}));
}

TEST(ParseBipartition, Forms) {
    EXPECT_EQ(parse_bipartition("0,1|1", false), bc({0, 1}, {1}));
    EXPECT_EQ(parse_bipartition("1|1", false), bc({0, 1}, {1}));
    EXPECT_EQ(parse_bipartition("|", false), bc({0}, {}));
    EXPECT_EQ(parse_bipartition("1|", true), dd({1}, {0}));
    EXPECT_THROW(parse_bipartition("0,1", false), InputError);
    EXPECT_THROW(parse_bipartition("0|1|2", false), InputError);
    EXPECT_THROW(parse_bipartition("a|1", false), InputError);
}

TEST(SpecializeSum, Examples) {
    EXPECT_EQ(specialize_sum(bc({0, 0}, {1}), bc({0, 0}, {1}), PairType::BB), bc({0, 1}, {1}));
    EXPECT_EQ(specialize_sum(bc({0, 2}, {0}), bc({0, 0}, {1}), PairType::BB), bc({0, 2}, {1}));
    EXPECT_EQ(partition_of_special_symbol(symbol_of(bc({0, 2}, {1})), GroupType::B), (P{5, 1, 1}));
}

TEST(SpecializeSum, EmptySummandIsNeutral) {
    const Bipartition rho = springer_bipartition(P{3, 1, 1, 1}, GroupType::D);
    EXPECT_EQ(symbol_of(specialize_sum(rho, dd({}, {}), PairType::DD)), symbol_of(rho));
    const Bipartition sigma = springer_bipartition(P{2, 2}, GroupType::C);
    EXPECT_EQ(specialize_sum(sigma, dd({}, {}), PairType::CD), sigma);
    const Bipartition tau = springer_bipartition(P{3, 1, 1}, GroupType::B);
    EXPECT_EQ(specialize_sum(tau, bc({0}, {}), PairType::BB), tau);
}

TEST(SpecializeSum, RejectsBadInput) {
    EXPECT_THROW(specialize_sum(bc({0, 0}, {1}), dd({1}, {0}), PairType::BB), InputError);
    EXPECT_THROW(specialize_sum(bc({0, 0}, {2}), bc({0}, {}), PairType::BB), InputError);
}

TEST(SpecialClosure, Examples) {
    EXPECT_EQ(special_closure(P{1, 1, 1}, P{1, 1, 1}, PairType::BB), (P{3, 1, 1}));
    EXPECT_EQ(special_closure(P{5}, P{1, 1, 1}, PairType::BB), (P{5, 1, 1}));
    EXPECT_EQ(waldspurger(P{5}, P{1, 1, 1}, PairType::BB), (P{5, 1, 1}));
    const P w = waldspurger(P{3, 3, 3}, P{1, 1, 1}, PairType::BB);
    ASSERT_EQ(w, (P{4, 4, 3}));
    EXPECT_FALSE(is_special(w, GroupType::B));
    EXPECT_EQ(special_closure(P{3, 3, 3}, P{1, 1, 1}, PairType::BB),
              oracle::brute_force_special_closure(w, GroupType::B));
}

TEST(BipartitionOrder, Examples) {
    EXPECT_TRUE(bipartition_leq(bc({0, 0}, {1}), bc({0, 1}, {0})));
    EXPECT_TRUE(bipartition_leq(bc({0, 1}, {1}), bc({0, 1}, {1})));
    EXPECT_FALSE(bipartition_leq(bc({0, 1}, {0}), bc({0, 0}, {1})));
    EXPECT_THROW(bipartition_leq(bc({0, 1}, {0}), bc({0, 1}, {1})), InputError);
    EXPECT_THROW(bipartition_leq(bc({0, 1}, {0}), dd({1}, {0})), InputError);
}

TEST(EnumerateBipartitions, Counts) {
    // Bipartitions of n: 1, 2, 5, 10, 20.
    const std::vector<std::size_t> counts = {1, 2, 5, 10, 20};
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(oracle::enumerate_bipartitions(n, false).size(), counts[static_cast<std::size_t>(n)]);
    }
}

}  // namespace
