#include <gtest/gtest.h>

#include <random>

#include "jfusion/index_vector.hpp"

using namespace jfusion;

namespace {

IndexVector random_vector(std::mt19937& rng, int k, int d) {
    std::uniform_int_distribution<int> dist(0, k);
    std::vector<int> v(static_cast<std::size_t>(d));
    for (auto& x : v) x = dist(rng);
    return IndexVector(v);
}

}  // namespace

TEST(IndexVector, Basics) {
    const IndexVector a{1, 0, 2};
    EXPECT_EQ(weight(a), 3);
    EXPECT_EQ(support(a), (std::vector<int>{0, 2}));
    EXPECT_EQ(a.to_string(), "[1,0,2]");
    EXPECT_EQ(IndexVector::unit(3, 2), (IndexVector{0, 1, 0}));
    EXPECT_EQ(IndexVector::constant(2, 3), (IndexVector{3, 3}));
    EXPECT_TRUE(a.in_cube(2));
    EXPECT_FALSE(a.in_cube(1));
    EXPECT_THROW(IndexVector::unit(3, 0), std::out_of_range);
    EXPECT_THROW(IndexVector({1, -1}), std::invalid_argument);
}

TEST(IndexVector, Arithmetic) {
    const IndexVector a{1, 0, 2};
    const IndexVector b{0, 2, 1};
    EXPECT_EQ(abs_diff(a, b), (IndexVector{1, 2, 1}));
    EXPECT_EQ(pointwise_min(a, b), (IndexVector{0, 0, 1}));
    EXPECT_EQ(pointwise_max(a, b), (IndexVector{1, 2, 2}));
    EXPECT_EQ(sum(a, b), (IndexVector{1, 2, 3}));
    EXPECT_EQ(difference(a, IndexVector{1, 0, 1}), (IndexVector{0, 0, 1}));
    EXPECT_THROW(difference(a, b), std::invalid_argument);
    EXPECT_THROW(sum(a, IndexVector{1}), std::invalid_argument);
}

TEST(IndexVector, FactorialsAndBinomials) {
    EXPECT_EQ(vector_factorial(IndexVector{2, 3}), 12);
    EXPECT_EQ(vector_binomial(IndexVector{3, 2}, IndexVector{1, 1}), 6);
    EXPECT_EQ(vector_binomial(IndexVector{3, 2}, IndexVector{0, 3}), 0);
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(factorial(0), 1);
    EXPECT_THROW(factorial(-1), std::invalid_argument);
}

TEST(IndexVector, ParametersGuard) {
    EXPECT_NO_THROW(Parameters(2, 3, 6));
    EXPECT_THROW(Parameters(2, 3, 5), std::invalid_argument);
    EXPECT_THROW(Parameters(0, 1), std::invalid_argument);
    EXPECT_THROW(Parameters(1, 0), std::invalid_argument);
    EXPECT_TRUE(Parameters(1, 2).generic());
}

TEST(IndexVectorProperty, DominationIsPartialOrder) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_vector(rng, 3, 4);
        const auto b = random_vector(rng, 3, 4);
        const auto c = random_vector(rng, 3, 4);
        EXPECT_TRUE(dominates(a, a));
        if (dominates(a, b) && dominates(b, a)) {
            EXPECT_EQ(a, b);
        }
        if (dominates(b, a) && dominates(c, b)) {
            EXPECT_TRUE(dominates(c, a));
        }
        EXPECT_EQ(weight(pointwise_min(a, b)) + weight(pointwise_max(a, b)), weight(a) + weight(b));
        EXPECT_TRUE(dominates(pointwise_max(a, b), a));
        EXPECT_TRUE(dominates(a, pointwise_min(a, b)));
        EXPECT_EQ(weight(abs_diff(a, b)), weight(pointwise_max(a, b)) - weight(pointwise_min(a, b)));
    }
}

TEST(IndexVectorProperty, DownSet) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_vector(rng, 3, 3);
        const auto down = down_set(a);
        std::size_t expected = 1;
        for (int x : a.entries()) expected *= static_cast<std::size_t>(x + 1);
        ASSERT_EQ(down.size(), expected);
        EXPECT_TRUE(std::is_sorted(down.begin(), down.end()));
        for (const auto& b : down) {
            EXPECT_TRUE(dominates(a, b));
            EXPECT_GT(vector_binomial(a, b), 0);
        }
    }
}

TEST(Cube, NumberingIsLexicographic) {
    const Cube cube(2, 3);
    ASSERT_EQ(cube.size(), 27u);
    EXPECT_EQ(cube.vector(cube.zero_id()), IndexVector::constant(3, 0));
    EXPECT_EQ(cube.vector(cube.top_id()), IndexVector::constant(3, 2));
    for (std::size_t i = 0; i < cube.size(); ++i) {
        EXPECT_EQ(cube.id(cube.vector(i)), i);
        EXPECT_EQ(cube.weight(i), weight(cube.vector(i)));
        if (i > 0) {
            EXPECT_LT(cube.vector(i - 1), cube.vector(i));
        }
    }
    const auto& order = cube.weight_order();
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto before = std::pair{cube.weight(order[i - 1]), cube.vector(order[i - 1])};
        const auto after = std::pair{cube.weight(order[i]), cube.vector(order[i])};
        EXPECT_LT(before, after);
    }
    EXPECT_THROW(cube.id(IndexVector{3, 0, 0}), std::invalid_argument);
}
