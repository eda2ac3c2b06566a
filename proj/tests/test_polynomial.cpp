#include <gtest/gtest.h>

#include <random>

#include "jfusion/index_vector.hpp"
#include "jfusion/polynomial.hpp"

using namespace jfusion;

namespace {

RationalPolynomial random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 4);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<mpq_class> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) {
        x = mpq_class(mpz_class(num(rng)), mpz_class(den(rng)));
        x.canonicalize();
    }
    return RationalPolynomial(std::move(c));
}

}  // namespace

TEST(Polynomial, ZeroAndConstants) {
    const RationalPolynomial zero;
    EXPECT_TRUE(zero.is_zero());
    EXPECT_FALSE(zero.degree());
    EXPECT_THROW(zero.leading_term(), std::domain_error);
    EXPECT_FALSE(zero.eventually_positive());
    EXPECT_EQ(zero.to_string(), "0");
    EXPECT_EQ(RationalPolynomial(std::vector<mpq_class>{0, 0, 0}), zero);
    EXPECT_EQ(RationalPolynomial(3L).degree(), 0);
}

TEST(Polynomial, BinomialInM) {
    const auto p = RationalPolynomial::binomial_in_m(0, 2);
    EXPECT_EQ(p.to_string(), "1/2*m^2 - 1/2*m");
    EXPECT_EQ(p.leading_term(), (LeadingTerm{mpq_class(1, 2), 2}));
    EXPECT_EQ(RationalPolynomial::binomial_in_m(-2, 1), RationalPolynomial::variable() - 2L);
    EXPECT_EQ(RationalPolynomial::binomial_in_m(5, 0), RationalPolynomial(1L));
    EXPECT_THROW(RationalPolynomial::binomial_in_m(0, -1), std::invalid_argument);
    for (long shift = -6; shift <= 3; ++shift)
        for (int t = 0; t <= 6; ++t)
            for (long m = std::max(0L, t - shift); m <= 20; ++m)
                EXPECT_EQ(RationalPolynomial::binomial_in_m(shift, t).evaluate(mpq_class(m)), mpq_class(binomial(m + shift, t)));
}

TEST(Polynomial, EventuallyPositive) {
    const auto m = RationalPolynomial::variable();
    EXPECT_TRUE((m * m - mpq_class(100) * m).eventually_positive());
    EXPECT_FALSE((-m + 1000L).eventually_positive());
}

TEST(Polynomial, SerializeRoundTrip) {
    const RationalPolynomial p(std::vector<mpq_class>{mpq_class(10), mpq_class(-9, 2), mpq_class(1, 2)});
    EXPECT_EQ(p.serialize(), (std::vector<std::string>{"10/1", "-9/2", "1/2"}));
    EXPECT_EQ(RationalPolynomial::deserialize(p.serialize()), p);
    EXPECT_EQ(RationalPolynomial::deserialize({"2/4", "0"}), RationalPolynomial(mpq_class(1, 2)));
    EXPECT_THROW(RationalPolynomial::deserialize({"one"}), std::invalid_argument);
}

TEST(PolynomialProperty, RingAxiomsAndEvaluation) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_poly(rng);
        const auto q = random_poly(rng);
        const auto s = random_poly(rng);
        EXPECT_EQ((p + q) + s, p + (q + s));
        EXPECT_EQ((p * q) * s, p * (q * s));
        EXPECT_EQ(p * (q + s), p * q + p * s);
        EXPECT_EQ(p * q, q * p);
        EXPECT_TRUE((p - p).is_zero());
        EXPECT_EQ(-(-p), p);
        if (!p.is_zero() && !q.is_zero()) {
            EXPECT_EQ(*(p * q).degree(), *p.degree() + *q.degree());
        }
        mpq_class x(static_cast<long>(i % 17) - 8, 3);
        x.canonicalize();
        EXPECT_EQ((p * q).evaluate(x), p.evaluate(x) * q.evaluate(x));
        EXPECT_EQ((p + q).evaluate(x), p.evaluate(x) + q.evaluate(x));
        EXPECT_EQ(RationalPolynomial::deserialize(p.serialize()), p);
    }
}
