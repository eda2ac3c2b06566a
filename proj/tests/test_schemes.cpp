#include <gtest/gtest.h>

#include "jfusion/enumerate.hpp"
#include "jfusion/schemes.hpp"

using namespace jfusion;

TEST(BlockStructure, Validation) {
    const BlockStructure b(4, {{0, 2}, {1, 3}});
    EXPECT_EQ(b.e(), 2);
    EXPECT_EQ(b.block_of(2), 0);
    EXPECT_EQ(b.to_string(), "[[1,3],[2,4]]");
    EXPECT_THROW(BlockStructure(4, {{0, 1, 2}, {3}}), std::invalid_argument);
    EXPECT_THROW(BlockStructure(4, {{0, 1}, {1, 2}}), std::invalid_argument);
    EXPECT_THROW(BlockStructure(4, {{0, 1}}), std::invalid_argument);
    EXPECT_THROW(BlockStructure(2, {{0, 5}}), std::invalid_argument);
}

TEST(BlockStructure, Counts) {
    // d! / ((e!)^{d/e} (d/e)!)
    EXPECT_EQ(block_structures(4, 2).size(), 3u);
    EXPECT_EQ(block_structures(6, 2).size(), 15u);
    EXPECT_EQ(block_structures(6, 3).size(), 10u);
    EXPECT_EQ(block_structures(5, 5).size(), 1u);
    EXPECT_EQ(all_block_structures(4).size(), 5u);
    EXPECT_THROW(block_structures(4, 3), std::invalid_argument);
}

TEST(Schemes, NamedPartitionsAreValid) {
    for (auto [k, d] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 2}, {3, 2}}) {
        const StructureTable table(k, d);
        EXPECT_TRUE(is_valid_fusion(table, discrete_partition(k, d)).valid);
        EXPECT_TRUE(is_valid_fusion(table, cameron_partition(k, d)).valid);
        for (const auto& b : all_block_structures(d)) {
            const auto trivial = trivial_block_partition(k, d, b);
            const auto hamming = hamming_block_partition(k, d, b);
            EXPECT_TRUE(is_valid_fusion(table, trivial).valid) << b.to_string();
            EXPECT_TRUE(is_valid_fusion(table, hamming).valid) << b.to_string();
            EXPECT_TRUE(discrete_partition(k, d).refines(trivial));
            EXPECT_TRUE(trivial.refines(hamming));
            EXPECT_TRUE(is_primitive(table, hamming)) << b.to_string();
        }
        EXPECT_TRUE(discrete_partition(k, d).refines(cameron_partition(k, d)));
        EXPECT_TRUE(is_primitive(table, cameron_partition(k, d)));
    }
}

TEST(Schemes, CellCounts) {
    // orbits of S_3 on [0,1]^3 minus zero: weights 1,2,3
    EXPECT_EQ(cameron_partition(1, 3).cell_count(), 4u);
    // multisets of size 2 from {0,1,2}
    EXPECT_EQ(cameron_partition(2, 2).cell_count(), 6u);
    const BlockStructure pairs(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(trivial_block_partition(1, 4, pairs).cell_count(), 4u);
    EXPECT_EQ(hamming_block_partition(1, 4, pairs).cell_count(), 3u);
    EXPECT_EQ(hamming_block_partition(2, 2, BlockStructure(2, {{0}, {1}})).cell_count(), 3u);
}

TEST(Classify, KnownFusions) {
    const StructureTable table(1, 2);
    const auto h = classify(table, cameron_partition(1, 2));
    EXPECT_EQ(h.verdict(), Verdict::CameronSandwich);
    ASSERT_EQ(h.hamming.size(), 1u);
    EXPECT_EQ(h.hamming.front().e(), 1);

    const FusionPartition trivial(1, 2, {{{0, 0}}, {{1, 0}, {0, 1}, {1, 1}}});
    const auto t = classify(table, trivial);
    EXPECT_EQ(t.verdict(), Verdict::HammingSandwich);
    ASSERT_EQ(t.hamming.size(), 1u);
    EXPECT_EQ(t.hamming.front().e(), 2);
    EXPECT_EQ(to_string(t.verdict()), "hamming");

    EXPECT_THROW(classify(table, discrete_partition(1, 2)), std::invalid_argument);
    const auto discrete = sandwich_memberships(discrete_partition(1, 2));
    EXPECT_TRUE(discrete.cameron);
    EXPECT_EQ(discrete.hamming.size(), 1u);

    EXPECT_EQ(classify(StructureTable(3, 1), discrete_partition(3, 1)).verdict(), Verdict::CameronSandwich);
}

TEST(Classify, FourCoordinateHamming) {
    const StructureTable table(1, 4);
    const BlockStructure pairs(4, {{0, 3}, {1, 2}});
    const auto c = classify(table, hamming_block_partition(1, 4, pairs));
    EXPECT_EQ(c.verdict(), Verdict::HammingSandwich);
    ASSERT_EQ(c.hamming.size(), 1u);
    EXPECT_EQ(c.hamming.front(), pairs);
}

TEST(ClassifyProperty, RelabelingInvariance) {
    const std::vector<std::vector<int>> perms{{1, 0, 2}, {2, 0, 1}, {0, 2, 1}};
    for (auto [k, d] : {std::pair{1, 3}}) {
        const StructureTable table(k, d);
        for (const auto& f : enumerate_fusions(k, d).fusions) {
            for (const auto& perm : perms) {
                const auto moved = f.partition.permuted(perm);
                EXPECT_TRUE(is_valid_fusion(table, moved).valid);
                EXPECT_EQ(is_primitive(table, moved), f.primitive);
                const auto a = sandwich_memberships(f.partition);
                const auto b = sandwich_memberships(moved);
                EXPECT_EQ(a.verdict(), b.verdict());
                EXPECT_EQ(a.hamming.size(), b.hamming.size());
            }
        }
    }
}

TEST(MinimalCells, PrimitiveFusions) {
    for (auto [k, d] : {std::pair{1, 2}, {1, 3}, {2, 2}, {3, 1}}) {
        EnumerationOptions options;
        options.primitive_only = true;
        for (const auto& f : enumerate_fusions(k, d, options).fusions) {
            for (const auto& r : verify_minimal_cell_structure(f.partition)) {
                EXPECT_TRUE(r.passed()) << f.partition.to_string();
                EXPECT_EQ(d % r.e, 0);
            }
        }
    }
    const auto reports = verify_minimal_cell_structure(hamming_block_partition(1, 4, BlockStructure(4, {{0, 1}, {2, 3}})));
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_EQ(reports.front().e, 2);
    EXPECT_EQ(reports.front().weight, 2);
}
