#include <gtest/gtest.h>

#include "support.hpp"

using namespace kacpal;

TEST(Partitions, CountsMatchBruteForce) {
    EXPECT_EQ(partition_count(0), 1u);
    EXPECT_EQ(partition_count(3), 3u);
    EXPECT_EQ(partition_count(4), 5u);
    for (int k = 0; k <= 20; ++k) {
        EXPECT_EQ(partition_count(k), kacpal::testing::brute_force_partition_count(k)) << k;
        EXPECT_EQ(partitions_of(k).size(), partition_count(k)) << k;
    }
}

TEST(Partitions, ReverseLexicographicOrder) {
    const auto ps = partitions_of(4);
    std::vector<std::vector<int>> parts;
    for (const auto& p : ps) parts.push_back(p.parts());
    EXPECT_EQ(parts, (std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
}

TEST(Partitions, Validation) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_TRUE(Partition(std::vector<int>{}).empty());
}

TEST(Partitions, ConjugateIsInvolution) {
    for (int k = 0; k <= 9; ++k)
        for (const auto& p : partitions_of(k)) {
            EXPECT_EQ(p.conjugate().conjugate(), p);
            EXPECT_EQ(p.conjugate().size(), p.size());
        }
    EXPECT_EQ(Partition({3, 2, 2}).conjugate(), Partition({3, 3, 1}));
}

TEST(StandardTableaux, HookFormulaMatchesBruteForceUpToEight) {
    for (int k = 1; k <= 8; ++k) {
        std::uint64_t sum_sq = 0;
        for (const auto& mu : partitions_of(k)) {
            const auto f = standard_tableaux_count(mu);
            EXPECT_EQ(f, kacpal::testing::brute_force_standard_tableaux(mu.parts())) << mu.to_string();
            EXPECT_EQ(f, standard_tableaux_count_branching(mu)) << mu.to_string();
            sum_sq += f * f;
        }
        EXPECT_EQ(sum_sq, factorial(static_cast<unsigned>(k)));
    }
}

TEST(StandardTableaux, KnownValues) {
    EXPECT_EQ(standard_tableaux_count(Partition({3, 2, 2})), 21u);
    EXPECT_EQ(standard_tableaux_count(Partition({2, 1})), 2u);
    EXPECT_EQ(standard_tableaux_count(Partition(std::vector<int>{})), 1u);
    EXPECT_EQ(hook_length(Partition({3, 2, 2}), 0, 0), 5);
    EXPECT_EQ(hook_length(Partition({3, 2, 2}), 2, 1), 1);
    EXPECT_THROW(hook_length(Partition({3, 2, 2}), 2, 2), std::out_of_range);
}

TEST(Tableau, ValidationAndShape) {
    const Tableau t({{1, 2, 3}, {4, 5}, {6, 7}});
    EXPECT_EQ(t.shape(), Partition({3, 2, 2}));
    EXPECT_TRUE(t.is_standard());
    EXPECT_EQ(row_consecutive_tableau(Partition({3, 2, 2})).rows(), t.rows());
    EXPECT_FALSE(Tableau({{2, 1}}).is_standard());
    EXPECT_THROW(Tableau({{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Tableau({{1}, {2, 3}}), std::invalid_argument);
}

TEST(YoungGroups, SizesForThreeTwoTwo) {
    const Tableau t = row_consecutive_tableau(Partition({3, 2, 2}));
    EXPECT_EQ(horizontal_group(t).size(), 3u * 2 * 1 * 2 * 2);  // 3! 2! 2!
    EXPECT_EQ(vertical_group(t).size(), 6u * 6 * 1);            // columns of heights 3, 3, 1
}

TEST(YoungSymmetrizer, TwoOneExpansion) {
    // T = [[1,2],[3]]: (1/3) (1 + (12)) (1 - (13))
    const SymFormalSum e = young_symmetrizer(Tableau({{1, 2}, {3}}));
    const Rational third = make_rational(1, 3);
    const Perm id({0, 1, 2}), s12({1, 0, 2}), s13({2, 1, 0});
    const Perm s12_s13 = s12.compose(s13);
    EXPECT_EQ(e.terms().size(), 4u);
    EXPECT_EQ(e.coefficient(id), third);
    EXPECT_EQ(e.coefficient(s12), third);
    EXPECT_EQ(e.coefficient(s13), -third);
    EXPECT_EQ(e.coefficient(s12_s13), -third);
}

TEST(YoungSymmetrizer, IdempotentUpToSix) {
    for (int k = 1; k <= 6; ++k)
        for (const auto& mu : partitions_of(k)) {
            const SymFormalSum e = young_symmetrizer(row_consecutive_tableau(mu));
            EXPECT_EQ(e * e, e) << mu.to_string();
        }
}

TEST(YoungSymmetrizer, RequiresStandardTableau) {
    EXPECT_THROW(young_symmetrizer(Tableau({{2, 1}})), std::invalid_argument);
}
