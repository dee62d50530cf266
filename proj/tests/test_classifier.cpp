#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace kacpal;

namespace {

std::vector<std::uint64_t> dims(const IrrepTable& t) {
    std::vector<std::uint64_t> out;
    for (const auto& r : t.records) out.push_back(r.dim_formula);
    return out;
}

}  // namespace

TEST(LabelledPartitions, CountsAndUniqueness) {
    EXPECT_EQ(enumerate_labelled_partitions(2, 3).size(), 10u);
    EXPECT_EQ(enumerate_labelled_partitions(2, 2).size(), 5u);
    EXPECT_EQ(labelled_partition_count(2, 4), 20u);
    EXPECT_EQ(labelled_partition_count(3, 2), 9u);  // 3 * p(2) + 3 * p(1)^2
    for (unsigned m = 1; m <= 7; ++m) EXPECT_EQ(labelled_partition_count(1, m), partition_count(static_cast<int>(m)));
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 5; ++m) {
            const auto all = enumerate_labelled_partitions(n, m);
            EXPECT_EQ(all.size(), labelled_partition_count(n, m));
            std::set<LabelledPartition> unique(all.begin(), all.end());
            EXPECT_EQ(unique.size(), all.size());
            for (const auto& b : all) {
                EXPECT_EQ(b.n(), n);
                EXPECT_EQ(b.m(), m);
            }
        }
}

TEST(LabelledPartitions, TableOrderForTwoThree) {
    std::vector<std::string> specs;
    for (const auto& b : enumerate_labelled_partitions(2, 3)) specs.push_back(b.to_spec());
    EXPECT_EQ(specs, (std::vector<std::string>{"0:3", "0:2,1", "0:1,1,1", "0:2;1:1", "0:1,1;1:1", "1:3", "1:2,1",
                                               "1:1,1,1", "0:1;1:2", "0:1;1:1,1"}));
}

TEST(BetaSpec, ParseFormatRoundTrip) {
    const auto beta = parse_beta_spec("0:3,2,2;2:1,1,1", 3, 10);
    EXPECT_EQ(beta.block(0), Partition({3, 2, 2}));
    EXPECT_TRUE(beta.block(1).empty());
    EXPECT_EQ(beta.block(2), Partition({1, 1, 1}));
    EXPECT_EQ(beta.to_spec(), "0:3,2,2;2:1,1,1");
    EXPECT_EQ(beta.to_display(), "((3,2,2),*,(1,1,1))");
    for (const auto& b : enumerate_labelled_partitions(3, 4)) EXPECT_EQ(parse_beta_spec(b.to_spec(), 3, 4), b);
}

TEST(BetaSpec, Errors) {
    EXPECT_THROW(parse_beta_spec("0:4", 2, 3), beta_parse_error);
    EXPECT_THROW(parse_beta_spec("2:3", 2, 3), beta_parse_error);
    EXPECT_THROW(parse_beta_spec("0:1,2", 2, 3), beta_parse_error);
    EXPECT_THROW(parse_beta_spec("0:2;0:1", 2, 3), beta_parse_error);
    EXPECT_THROW(parse_beta_spec("0;3", 2, 3), beta_parse_error);
    EXPECT_THROW(parse_beta_spec("0:a", 2, 3), beta_parse_error);
}

TEST(LambdaFromBeta, BlockDescription) {
    EXPECT_EQ(lambda_from_beta(parse_beta_spec("0:2;1:1", 2, 3)), (ZnVector{0, 0, 1}));
    EXPECT_EQ(lambda_from_beta(parse_beta_spec("0:1;1:2", 2, 3)), (ZnVector{0, 1, 1}));
    EXPECT_EQ(lambda_from_beta(parse_beta_spec("1:3", 2, 3)), (ZnVector{1, 1, 1}));
}

TEST(IotaEmbed, ShiftsOntoBlockSlots) {
    const auto alg = GroupAlgebra::get(2, 3);
    const auto beta = parse_beta_spec("0:1;1:2", 2, 3);
    const auto swap = SymFormalSum::single(Perm({1, 0}));
    EXPECT_EQ(iota_embed(alg, beta, 1, swap), s_element(alg, 2));
    const auto beta2 = parse_beta_spec("0:2;1:1", 2, 3);
    EXPECT_EQ(iota_embed(alg, beta2, 0, swap), s_element(alg, 1));
    EXPECT_EQ(iota_embed(alg, beta2, 1, SymFormalSum::single(Perm({0}))), AlgebraElement::identity(alg));
    EXPECT_THROW(iota_embed(alg, beta2, 0, SymFormalSum::single(Perm({0}))), std::invalid_argument);
    EXPECT_THROW(iota_embed(alg, parse_beta_spec("0:3", 2, 3), 1, swap), std::invalid_argument);
}

TEST(Idempotent, ExampleRowsFromGenerators) {
    const auto alg = GroupAlgebra::get(2, 3);
    const auto one = AlgebraElement::identity(alg);
    const auto s1 = s_element(alg, 1), s2 = s_element(alg, 2);
    // ((3),*): (1/6) Lambda_000 (1 + s1 + s2 + s1 s2 + s2 s1 + s1 s2 s1)
    EXPECT_EQ(idempotent_from_beta(alg, parse_beta_spec("0:3", 2, 3)),
              lambda_idempotent(alg, {0, 0, 0}) * (one + s1 + s2 + s1 * s2 + s2 * s1 + s1 * s2 * s1) * make_rational(1, 6));
    // ((1,1),(1)): (1/2) Lambda_001 (1 - s1)
    EXPECT_EQ(idempotent_from_beta(alg, parse_beta_spec("0:1,1;1:1", 2, 3)),
              lambda_idempotent(alg, {0, 0, 1}) * (one - s1) * make_rational(1, 2));
    // ((2,1),*): (1/3) Lambda_000 (1 + s1)(1 - s1 s2 s1)
    EXPECT_EQ(idempotent_from_beta(alg, parse_beta_spec("0:2,1", 2, 3)),
              lambda_idempotent(alg, {0, 0, 0}) * (one + s1) * (one - s1 * s2 * s1) * make_rational(1, 3));
}

TEST(Idempotent, FactorOrderDoesNotMatter) {
    const auto alg = GroupAlgebra::get(3, 3);
    for (const auto& beta : enumerate_labelled_partitions(3, 3)) {
        const auto lam = lambda_idempotent(alg, lambda_from_beta(beta));
        AlgebraElement forward = lam, backward = AlgebraElement::identity(alg);
        for (unsigned i = 0; i < beta.n(); ++i) {
            if (beta.block(i).empty()) continue;
            const auto f = iota_embed(alg, beta, i, young_symmetrizer(row_consecutive_tableau(beta.block(i))));
            forward = forward * f;
            backward = f * backward;
        }
        backward = backward * lam;
        EXPECT_EQ(forward, backward) << beta.to_spec();
        EXPECT_EQ(forward, idempotent_from_beta(alg, beta));
    }
}

TEST(Dimensions, FormulaHookAndExamples) {
    EXPECT_EQ(irrep_dimension(parse_beta_spec("0:3", 2, 3)).formula, 1u);
    EXPECT_EQ(irrep_dimension(parse_beta_spec("0:2;1:1", 2, 3)).formula, 3u);
    const auto big = irrep_dimension(parse_beta_spec("0:3,2,2;2:1,1,1", 3, 10));
    EXPECT_EQ(big.formula, 2520u);  // 10!/(7! 3!) * 21 * 1
    EXPECT_EQ(big.hook, 2520u);
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned m = 1; m <= 7; ++m)
            for (const auto& b : enumerate_labelled_partitions(n, m)) {
                const auto d = irrep_dimension(b);
                EXPECT_EQ(d.formula, d.hook) << b.to_spec();
            }
}

TEST(Dimensions, SymmetricUnderRelabelling) {
    for (const auto& b : enumerate_labelled_partitions(3, 4)) {
        std::vector<Partition> rotated(b.blocks().begin() + 1, b.blocks().end());
        rotated.push_back(b.blocks().front());
        EXPECT_EQ(irrep_dimension(b).formula, irrep_dimension(LabelledPartition(rotated)).formula);
    }
}

TEST(IrrepTable, TwoThreeGolden) {
    const auto t = irrep_table(2, 3);
    EXPECT_EQ(dims(t), (std::vector<std::uint64_t>{1, 2, 1, 3, 3, 1, 2, 1, 3, 3}));
    EXPECT_EQ(t.sum_dim_squares, 48u);
    EXPECT_TRUE(t.all_passed());
}

TEST(IrrepTable, SmallCasesWithAllChecks) {
    TableOptions opts;
    opts.idempotency = opts.ranks = opts.orthogonality = opts.conjugacy = true;
    for (auto [n, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 3}, {2, 2}}) {
        const auto t = irrep_table(n, m, opts);
        EXPECT_TRUE(t.all_passed()) << n << "," << m;
        for (const auto& r : t.records) {
            EXPECT_EQ(r.dim_rank, r.dim_formula);
            EXPECT_EQ(r.self_sandwich, 1u);
            EXPECT_EQ(r.is_idempotent, true);
        }
    }
    EXPECT_EQ(dims(irrep_table(1, 3)), (std::vector<std::uint64_t>{1, 2, 1}));
    EXPECT_EQ(irrep_table(2, 2).sum_dim_squares, 8u);
    const auto t32 = irrep_table(3, 2);
    EXPECT_EQ(t32.records.size(), 9u);
    EXPECT_EQ(t32.sum_dim_squares, 18u);
}

TEST(IrrepTable, CapsAreCheckedUpFront) {
    TableOptions opts;
    opts.ranks = true;
    EXPECT_THROW(irrep_table(2, 6, opts), cap_exceeded);
    EXPECT_NO_THROW(irrep_table(2, 6));
}
