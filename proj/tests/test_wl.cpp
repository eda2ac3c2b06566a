#include <gtest/gtest.h>

#include "jfusion/enumerate.hpp"
#include "jfusion/errors.hpp"
#include "jfusion/schemes.hpp"
#include "jfusion/wl.hpp"

using namespace jfusion;

namespace {

EnumerationOptions numeric_options(long m) {
    EnumerationOptions options;
    options.mode = Mode::numeric(m);
    return options;
}

// path on n vertices: {diag, edge, non-edge}
PairColoring path(std::size_t n) {
    std::vector<std::uint32_t> colors(n * n, 2);
    for (std::size_t i = 0; i < n; ++i) colors[i * n + i] = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) colors[i * n + i + 1] = colors[(i + 1) * n + i] = 1;
    return PairColoring(n, colors);
}

}  // namespace

TEST(PairColoring, Canonical) {
    const PairColoring c(2, {7, 3, 3, 7});
    EXPECT_EQ(c.color_count(), 2u);
    EXPECT_EQ(c.colors(), (std::vector<std::uint32_t>{0, 1, 1, 0}));
    EXPECT_EQ(c.class_sizes(), (std::vector<std::size_t>{2, 2}));
    EXPECT_TRUE(c.separates_diagonal());
    EXPECT_TRUE(c.symmetric());
    EXPECT_FALSE(PairColoring(2, {0, 0, 1, 0}).separates_diagonal());
    EXPECT_THROW(PairColoring(2, {0, 1, 1}), std::invalid_argument);
}

TEST(WL, PathSplitsByDistanceAndEnd) {
    const auto r = wl_closure(path(5));
    EXPECT_TRUE(is_coherent(r.coloring));
    EXPECT_GT(r.rounds, 0);
    EXPECT_TRUE(refines(r.coloring, path(5)));
    // ends separate from interior vertices on the diagonal
    EXPECT_NE(r.coloring(0, 0), r.coloring(2, 2));
    EXPECT_EQ(r.coloring(0, 0), r.coloring(4, 4));
    EXPECT_THROW(wl_closure(PairColoring(2, {0, 0, 0, 0})), std::invalid_argument);
}

TEST(WL, CameronGraphClosureIsCameronScheme) {
    for (auto [k, d, m] : {std::tuple{1, 2, 4}, {1, 2, 5}, {2, 1, 7}, {2, 1, 8}, {1, 3, 4}}) {
        const auto raw = build_explicit(k, d, m);
        const auto fused = build_explicit(k, d, m, cameron_partition(k, d));
        const auto r = wl_closure(cameron_graph_coloring(raw));
        EXPECT_EQ(r.coloring, scheme_coloring(fused)) << "k=" << k << " d=" << d << " m=" << m;
    }
}

TEST(WL, HammingGraphClosureIsHammingScheme) {
    const auto raw = build_explicit(2, 2, 6);
    const auto hamming = hamming_block_partition(2, 2, BlockStructure(2, {{0}, {1}}));
    const auto r = wl_closure(hamming_graph_coloring(raw));
    EXPECT_EQ(r.coloring, scheme_coloring(build_explicit(2, 2, 6, hamming)));
}

TEST(WLProperty, IdempotentAndMonotone) {
    for (auto [k, d, m] : {std::tuple{1, 2, 4}, {2, 1, 7}, {1, 3, 3}}) {
        const auto raw = build_explicit(k, d, m);
        const auto graph = cameron_graph_coloring(raw);
        const auto fine = scheme_coloring(raw);
        const auto closed = wl_closure(graph);
        const auto again = wl_closure(closed.coloring);
        EXPECT_EQ(again.coloring, closed.coloring);
        EXPECT_EQ(again.rounds, 0);
        EXPECT_TRUE(refines(closed.coloring, graph));
        ASSERT_TRUE(refines(fine, graph));
        EXPECT_TRUE(refines(wl_closure(fine).coloring, closed.coloring));
        EXPECT_EQ(wl_round(closed.coloring), closed.coloring);
    }
}

TEST(WL, ValidFusionsAreStable) {
    const long m = 4;
    const auto r = enumerate_fusions(1, 3, numeric_options(m));
    for (const auto& f : r.fusions) {
        const auto c = scheme_coloring(build_explicit(1, 3, m, f.partition));
        EXPECT_TRUE(is_coherent(c)) << f.partition.to_string();
        EXPECT_TRUE(c.symmetric());
    }
    const FusionPartition broken(3, 1, {{{0}}, {{1}, {2}}, {{3}}});
    EXPECT_FALSE(is_coherent(scheme_coloring(build_explicit(3, 1, 9, broken))));
}

TEST(WL, Guard) {
    EXPECT_THROW(wl_closure(scheme_coloring(build_explicit(1, 2, 27))), GuardError);
}
