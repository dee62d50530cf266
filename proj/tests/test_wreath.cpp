#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace kacpal;

TEST(Perm, LehmerRankRoundTrip) {
    for (std::size_t k = 1; k <= 6; ++k) {
        std::set<std::uint64_t> seen;
        for (std::uint64_t r = 0; r < factorial(static_cast<unsigned>(k)); ++r) {
            const Perm p = Perm::from_lehmer_rank(k, r);
            EXPECT_EQ(p.lehmer_rank(), r);
            seen.insert(r);
        }
        EXPECT_EQ(seen.size(), factorial(static_cast<unsigned>(k)));
    }
    EXPECT_TRUE(Perm::from_lehmer_rank(4, 0).is_identity());
}

TEST(Perm, AdjacentWordMultipliesBack) {
    for (std::size_t k = 1; k <= 6; ++k)
        for (std::uint64_t r = 0; r < factorial(static_cast<unsigned>(k)); ++r) {
            const Perm p = Perm::from_lehmer_rank(k, r);
            Perm acc = Perm::identity(k);
            for (auto pos : p.adjacent_word()) acc = acc.compose(Perm::transposition(k, pos, pos + 1));
            EXPECT_EQ(acc, p);
            EXPECT_EQ(p.adjacent_word().size() % 2 == 0 ? 1 : -1, p.sign());
        }
}

TEST(Perm, RejectsNonBijections) {
    EXPECT_THROW(Perm({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Perm({0, 3}), std::invalid_argument);
}

TEST(WreathGroup, OrderAndIndexRoundTrip) {
    for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const auto group = WreathGroup::get(n, m);
        EXPECT_EQ(group->order(), wreath_order(n, m));
        const auto all = group->enumerate();
        ASSERT_EQ(all.size(), group->order());
        for (GroupIndex i = 0; i < all.size(); ++i) {
            EXPECT_EQ(group->index(all[i]), i);
            EXPECT_EQ(group->element(i), all[i]);
        }
        EXPECT_EQ(group->index(group->identity()), 0u);
    }
}

TEST(WreathGroup, GroupAxiomsOnRandomTriples) {
    auto g = kacpal::testing::rng(3);
    for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {3, 3}, {4, 2}, {2, 4}}) {
        const auto group = WreathGroup::get(n, m);
        std::uniform_int_distribution<GroupIndex> pick(0, static_cast<GroupIndex>(group->order() - 1));
        for (int t = 0; t < 200; ++t) {
            const auto a = group->element(pick(g)), b = group->element(pick(g)), c = group->element(pick(g));
            EXPECT_EQ(group->multiply(group->multiply(a, b), c), group->multiply(a, group->multiply(b, c)));
            EXPECT_EQ(group->multiply(a, group->inverse(a)), group->identity());
            EXPECT_EQ(group->multiply(group->identity(), a), a);
        }
    }
}

TEST(WreathGroup, GeneratorRelations) {
    const auto group = WreathGroup::get(3, 3);
    const auto e = group->identity();
    auto power = [&](const WreathElement& x, unsigned k) {
        WreathElement r = e;
        for (unsigned i = 0; i < k; ++i) r = group->multiply(r, x);
        return r;
    };
    for (unsigned i = 1; i <= 3; ++i) {
        EXPECT_NE(group->generator_a(i), e);
        EXPECT_EQ(power(group->generator_a(i), 3), e);
    }
    for (unsigned l = 1; l <= 2; ++l) {
        const auto b = group->generator_b(l);
        EXPECT_EQ(group->multiply(b, b), e);
        for (unsigned i = 1; i <= 3; ++i) {
            const unsigned si = i == l ? l + 1 : (i == l + 1 ? l : i);
            EXPECT_EQ(group->multiply(b, group->generator_a(i)), group->multiply(group->generator_a(si), b));
        }
    }
    EXPECT_THROW(group->generator_a(0), std::out_of_range);
    EXPECT_THROW(group->generator_b(3), std::out_of_range);
}

TEST(WreathGroup, MultiplicationRuleByHand) {
    // (a, g)(b, h) = (a + b o g^-1, g h)
    const auto group = WreathGroup::get(3, 3);
    const WreathElement u{{1, 0, 2}, Perm({1, 2, 0})};
    const WreathElement v{{2, 1, 0}, Perm({0, 2, 1})};
    const auto w = group->multiply(u, v);
    // g^-1 = (2,0,1): b o g^-1 = (b[2], b[0], b[1]) = (0,2,1)
    EXPECT_EQ(w.twists, (std::vector<int>{1, 2, 0}));
    EXPECT_EQ(w.perm, Perm({1, 0, 2}));
}

TEST(WreathTable, AgreesWithDirectMultiplication) {
    const auto& table = *WreathTable::get(2, 3);
    const auto& group = table.group();
    for (GroupIndex a = 0; a < table.order(); ++a)
        for (GroupIndex b = 0; b < table.order(); ++b)
            ASSERT_EQ(table.multiply(a, b), group.index(group.multiply(group.element(a), group.element(b))));
}

TEST(ConjugacyClasses, MatchCommutingPairsOracle) {
    for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {1, 4}, {2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        EXPECT_EQ(conjugacy_class_count(n, m), kacpal::testing::commuting_pairs_class_count(n, m)) << n << "," << m;
    }
    EXPECT_EQ(conjugacy_class_count(1, 5), 7u);
    EXPECT_EQ(conjugacy_class_count(2, 4), 20u);
}

TEST(Caps, OrderAboveCapThrows) {
    EXPECT_THROW(conjugacy_class_count(2, 6, 10000), cap_exceeded);
    try {
        enforce_cap("ranks", 46080, 2000);
        FAIL();
    } catch (const cap_exceeded& e) {
        EXPECT_EQ(e.check(), "ranks");
        EXPECT_NE(std::string(e.what()).find("46080"), std::string::npos);
    }
}
