#include <gtest/gtest.h>

#include "jfusion/enumerate.hpp"
#include "jfusion/fusion.hpp"
#include "jfusion/schemes.hpp"
#include "oracles.hpp"

using namespace jfusion;

namespace {

FusionPartition wreath(int which) {
    // coordinate `which` kept apart, the rest fused
    if (which == 0) return FusionPartition(1, 2, {{{0, 0}}, {{1, 0}}, {{0, 1}, {1, 1}}});
    return FusionPartition(1, 2, {{{0, 0}}, {{0, 1}}, {{1, 0}, {1, 1}}});
}

std::vector<int> labels_of(const FusionPartition& s) {
    std::vector<int> labels(s.cube().size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(s.cell_of(i));
    return labels;
}

}  // namespace

TEST(FusionPartition, CanonicalForm) {
    const FusionPartition s(1, 2, {{{1, 1}, {0, 1}}, {{1, 0}}, {{0, 0}}});
    EXPECT_EQ(s.cell_count(), 3u);
    EXPECT_EQ(s.cell(FusionPartition::identity_cell), (std::vector<std::size_t>{0}));
    EXPECT_EQ(s, wreath(0));
    EXPECT_EQ(s.cell_of(IndexVector{1, 1}), s.cell_of(IndexVector{0, 1}));
    EXPECT_EQ(s.cell_weight(s.cell_of(IndexVector{1, 1})), 2);
}

TEST(FusionPartition, RejectsMalformed) {
    EXPECT_THROW(FusionPartition(1, 2, {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}}), std::invalid_argument);
    EXPECT_THROW(FusionPartition(1, 2, {{{0, 0}}, {{1, 0}}, {{0, 1}}}), std::invalid_argument);
    EXPECT_THROW(FusionPartition(1, 2, {{{0, 0}}, {{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}), std::invalid_argument);
    EXPECT_THROW(FusionPartition(1, 2, {{{0, 0}}, {{1, 0}, {0, 1}}, {}}), std::invalid_argument);
    EXPECT_THROW(FusionPartition(1, 2, {{{0, 0}}, {{2, 0}, {1, 0}, {0, 1}, {1, 1}}}), std::invalid_argument);
}

TEST(FusionPartition, RefinesAndPermutes) {
    const auto discrete = discrete_partition(1, 2);
    const FusionPartition trivial(1, 2, {{{0, 0}}, {{1, 0}, {0, 1}, {1, 1}}});
    EXPECT_TRUE(discrete.refines(wreath(0)));
    EXPECT_TRUE(wreath(0).refines(trivial));
    EXPECT_FALSE(trivial.refines(wreath(0)));
    EXPECT_FALSE(wreath(0).refines(wreath(1)));
    EXPECT_EQ(wreath(0).permuted({1, 0}), wreath(1));
    EXPECT_THROW(wreath(0).permuted({0, 0}), std::invalid_argument);
}

TEST(Fusion, WreathAndNamedPartitionsAreValid) {
    const StructureTable table(1, 2);
    EXPECT_TRUE(is_valid_fusion(table, wreath(0)).valid);
    EXPECT_TRUE(is_valid_fusion(table, wreath(1)).valid);
    EXPECT_TRUE(is_valid_fusion(table, discrete_partition(1, 2)).valid);
}

TEST(Fusion, FusedConstants) {
    const StructureTable table(1, 2);
    const auto s = wreath(0);
    const auto m = RationalPolynomial::variable();
    const std::size_t far = s.cell_of(IndexVector{1, 1});
    // valency of "second coordinate differs": m(m-1)
    EXPECT_EQ(fused_structure_constant(table, s, 0, far, far), m * m - m);
    // (x,y),(x',y): w only has to move the second coordinate off y
    EXPECT_EQ(fused_structure_constant(table, s, table.cube().id(IndexVector{1, 0}), far, far), m * m - m);
    // (x,y),(x,y'): w avoids both y and y'
    EXPECT_EQ(fused_structure_constant(table, s, table.cube().id(IndexVector{0, 1}), far, far), m * m - mpq_class(2) * m);
    EXPECT_THROW(fused_structure_constant(table, s, 0, 7, 0), std::out_of_range);
}

TEST(Fusion, FusedConstantsMatchBruteForce) {
    for (long m : {4L, 5L}) {
        const auto counts = oracle::count_table(1, 2, static_cast<int>(m));
        const StructureTable table(1, 2);
        for (const auto& f : enumerate_fusions(1, 2).fusions) {
            const auto& s = f.partition;
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t beta = 0; beta < s.cell_count(); ++beta)
                    for (std::size_t gamma = 0; gamma < s.cell_count(); ++gamma) {
                        std::uint64_t expected = 0;
                        for (std::size_t b : s.cell(beta))
                            for (std::size_t c : s.cell(gamma)) expected += counts(a, b, c);
                        EXPECT_EQ(fused_structure_constant(table, s, a, beta, gamma).evaluate(m),
                                  mpq_class(mpz_class(static_cast<unsigned long>(expected))));
                    }
        }
    }
}

TEST(Fusion, InvalidPartitionGivesWitness) {
    const StructureTable table(3, 1);
    const FusionPartition s(3, 1, {{{0}}, {{1}, {2}}, {{3}}});
    const auto verdict = is_valid_fusion(table, s);
    ASSERT_FALSE(verdict.valid);
    ASSERT_TRUE(verdict.witness);
    const auto& w = *verdict.witness;
    EXPECT_EQ(s.cell_of(w.a), w.alpha);
    EXPECT_EQ(s.cell_of(w.a_prime), w.alpha);
    EXPECT_NE(w.value_a, w.value_a_prime);
    EXPECT_EQ(fused_structure_constant(table, s, table.cube().id(w.a), w.beta, w.gamma), w.value_a);
    EXPECT_FALSE(oracle::fusion_valid(oracle::count_table(3, 1, 9), labels_of(s)));
    EXPECT_THROW(verify_key_prop(table, s, 1), std::invalid_argument);
}

TEST(Fusion, NumericModeAgreesWithBruteForceValidity) {
    for (auto [k, d, m] : {std::tuple{1, 2, 3}, {1, 2, 4}, {2, 1, 6}, {3, 1, 9}, {1, 3, 3}}) {
        const StructureTable table(k, d, Mode::numeric(m));
        const auto counts = oracle::count_table(k, d, m);
        const auto cube = table.shared_cube();
        std::size_t agreed = 0;
        oracle::for_each_partition(cube->size() - 1, [&](const std::vector<int>& rgs) {
            std::vector<int> labels{0};
            for (int x : rgs) labels.push_back(x + 1);
            std::vector<std::vector<std::size_t>> cells(static_cast<std::size_t>(*std::max_element(labels.begin(), labels.end()) + 1));
            for (std::size_t i = 0; i < labels.size(); ++i) cells[static_cast<std::size_t>(labels[i])].push_back(i);
            const FusionPartition s(cube, cells);
            EXPECT_EQ(is_valid_fusion(table, s).valid, oracle::fusion_valid(counts, labels)) << s.to_string();
            ++agreed;
        });
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(agreed)), bell_number(static_cast<unsigned>(cube->size() - 1)));
    }
}

TEST(Fusion, TableGuard) {
    EXPECT_THROW(StructureTable(1, 8), std::invalid_argument);
    EXPECT_THROW(StructureTable(1, 2, Mode::numeric(2)), std::invalid_argument);
}

TEST(KeyProp, EveryCellOfEveryFusion) {
    for (auto [k, d] : {std::pair{1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
        const StructureTable table(k, d);
        for (const auto& f : enumerate_fusions(k, d).fusions) {
            const auto& s = f.partition;
            for (std::size_t beta = 0; beta < s.cell_count(); ++beta) {
                const auto r = verify_key_prop(table, s, beta);
                EXPECT_TRUE(r.passed()) << s.to_string() << " cell " << beta;
                ASSERT_TRUE(r.n_self);
                EXPECT_EQ(*r.n_self, 1);
            }
        }
    }
}

TEST(KeyProp, DominationAgreesWithN) {
    for (auto [k, d] : {std::pair{1, 3}, {2, 2}}) {
        for (const auto& f : enumerate_fusions(k, d).fusions) {
            const auto& s = f.partition;
            const auto order = domination_preorder(s);
            EXPECT_TRUE(order.antisymmetric);
            for (std::size_t beta = 0; beta < s.cell_count(); ++beta) {
                const auto cell = analyze_cell(s, beta);
                for (std::size_t alpha = 0; alpha < s.cell_count(); ++alpha) {
                    ASSERT_TRUE(cell.n_constants[alpha]);
                    EXPECT_EQ(*cell.n_constants[alpha] > 0, order.precedes[alpha][beta]);
                }
                // D_beta is a union of cells
                for (std::size_t id : cell.down_closure)
                    for (std::size_t other : s.cell(s.cell_of(id)))
                        EXPECT_TRUE(std::binary_search(cell.down_closure.begin(), cell.down_closure.end(), other));
            }
        }
    }
}

TEST(KeyProp, AnalyzeCellExample) {
    const auto s = wreath(0);
    const std::size_t far = s.cell_of(IndexVector{1, 1});
    const auto cell = analyze_cell(s, far);
    EXPECT_EQ(cell.weight, 2);
    EXPECT_EQ(cell.star, (std::vector<std::size_t>{s.cube().id(IndexVector{1, 1})}));
    EXPECT_EQ(cell.down_closure.size(), 4u);
    EXPECT_EQ(dominator_sum(s, cell, 0), 1);
    const auto order = domination_preorder(s);
    EXPECT_EQ(order.minimal, (std::vector<std::size_t>{s.cell_of(IndexVector{1, 0})}));
}

TEST(Primitivity, IndexLevel) {
    const StructureTable t12(1, 2);
    EXPECT_FALSE(is_primitive(t12, wreath(0)));
    EXPECT_FALSE(is_primitive(t12, wreath(1)));
    EXPECT_FALSE(is_primitive(t12, discrete_partition(1, 2)));
    EXPECT_TRUE(is_primitive(t12, cameron_partition(1, 2)));
    const auto closure = composition_closure(t12, wreath(0), wreath(0).cell_of(IndexVector{1, 0}));
    EXPECT_EQ(std::count(closure.begin(), closure.end(), true), 2);
    for (int k = 1; k <= 4; ++k) EXPECT_TRUE(is_primitive(StructureTable(k, 1), discrete_partition(k, 1)));
    EXPECT_FALSE(is_primitive(StructureTable(2, 2), discrete_partition(2, 2)));
}
