#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include <kummer/polyring.hpp>

#include "oracles/random_polys.hpp"

using kummer::GradedSPoly;
using kummer::make_rational;
using kummer::Partition;
using kummer::Rational;
using kummer::SMonomial;
using kummer::UPoly;
using kummer::ZSeries;

namespace
{

SMonomial s(std::initializer_list<int> indices)
{
    return SMonomial(Partition::from_multiset(std::vector<int>(indices)));
}

GradedSPoly poly(int cap, std::initializer_list<std::pair<SMonomial, Rational>> terms)
{
    GradedSPoly p(cap);
    for (const auto &[m, c] : terms) {
        p.add_term(m, c);
    }
    return p;
}

} // namespace

TEST(Rational, CanonicalForm)
{
    const Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(SMonomial, WeightAndProduct)
{
    EXPECT_EQ(s({2, 1, 1}).weight(), 4);
    EXPECT_EQ(s({1}) * s({2, 1}), s({2, 1, 1}));
    EXPECT_EQ(s({2, 1, 1}).automorphism_factor(), 2);
    EXPECT_EQ(s({2, 2, 1, 1, 1}).to_string(), "s1^3 s2^2");
}

TEST(SPolyMul, Examples)
{
    const auto one_plus_s1 = poly(2, {{s({}), 1}, {s({1}), 1}});
    EXPECT_EQ(kummer::spoly_mul(one_plus_s1, one_plus_s1), poly(2, {{s({}), 1}, {s({1}), 2}, {s({1, 1}), 1}}));

    EXPECT_TRUE(kummer::spoly_mul(poly(2, {{s({1}), 1}}), poly(2, {{s({2}), 1}})).is_zero());

    EXPECT_EQ(kummer::spoly_mul(poly(4, {{s({2}), 3}}), poly(4, {{s({2}), 5}})), poly(4, {{s({2, 2}), 15}}));
}

TEST(SPolyMul, CapMismatchThrows)
{
    EXPECT_THROW(kummer::spoly_mul(GradedSPoly(2), GradedSPoly(3)), kummer::truncation_mismatch);
    GradedSPoly a(2);
    EXPECT_THROW(a += GradedSPoly(3), kummer::truncation_mismatch);
}

TEST(GradedSPoly, NeverStoresZerosOrOverweightTerms)
{
    GradedSPoly p(3);
    p.add_term(s({2, 2}), 7);
    EXPECT_TRUE(p.is_zero());
    p.add_term(s({1}), 2);
    p.add_term(s({1}), -2);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.term_count(), 0u);
}

TEST(GradedSPoly, RingAxiomsOnRandomSamples)
{
    std::mt19937 rng(20261018);
    for (int trial = 0; trial < 60; ++trial) {
        const int cap = 1 + trial % 7;
        const auto a = oracle::random_spoly(rng, cap);
        const auto b = oracle::random_spoly(rng, cap);
        const auto c = oracle::random_spoly(rng, cap);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * GradedSPoly::one(cap), a);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(ExpTruncated, Examples)
{
    UPoly e(2, 2);
    e[1] = poly(2, {{s({1}), 3}});
    UPoly expected(2, 2);
    expected[0] = GradedSPoly::one(2);
    expected[1] = poly(2, {{s({1}), 3}});
    expected[2] = poly(2, {{s({1, 1}), make_rational(9, 2)}});
    EXPECT_EQ(kummer::exp_truncated(e), expected);

    UPoly zero(3, 4);
    UPoly unit(3, 4);
    unit[0] = GradedSPoly::one(4);
    EXPECT_EQ(kummer::exp_truncated(zero), unit);

    e[2] = poly(2, {{s({2}), 5}});
    expected[2] = poly(2, {{s({1, 1}), make_rational(9, 2)}, {s({2}), 5}});
    EXPECT_EQ(kummer::exp_truncated(e), expected);
}

TEST(ExpTruncated, RejectsConstantTerm)
{
    UPoly e(2, 2);
    e[0] = GradedSPoly::one(2);
    EXPECT_THROW(kummer::exp_truncated(e), std::domain_error);
}

TEST(ExpTruncated, AdditionBecomesMultiplication)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = oracle::random_exponent(rng, 4, 4);
        const auto b = oracle::random_exponent(rng, 4, 4);
        UPoly sum = a;
        sum += b;
        EXPECT_EQ(kummer::exp_truncated(sum), kummer::upoly_mul(kummer::exp_truncated(a), kummer::exp_truncated(b)));
    }
}

TEST(ZSeriesLog, ScalarSeries)
{
    // ln(1 + a z) = a z - a^2/2 z^2 + a^3/3 z^3
    const Rational a = make_rational(3, 5);
    ZSeries h(3, 0);
    h[0] = GradedSPoly::one(0);
    h[1] = GradedSPoly::constant(a, 0);
    const auto log = kummer::zseries_log(h);
    EXPECT_EQ(log[0], GradedSPoly(0));
    EXPECT_EQ(log[1], GradedSPoly::constant(a, 0));
    EXPECT_EQ(log[2], GradedSPoly::constant(-a * a / 2, 0));
    EXPECT_EQ(log[3], GradedSPoly::constant(a * a * a / 3, 0));
}

TEST(ZSeriesLog, OfOneIsZero)
{
    ZSeries h(4, 3);
    h[0] = GradedSPoly::one(3);
    EXPECT_EQ(kummer::zseries_log(h), ZSeries(4, 3));
}

TEST(ZSeriesLog, RejectsNonUnitConstant)
{
    ZSeries h(2, 1);
    h[0] = GradedSPoly::constant(2, 1);
    EXPECT_THROW(kummer::zseries_log(h), std::domain_error);
}

TEST(ZSeriesLog, MatchesDefiningSeriesOnRandomInputs)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const int n_max = 4;
        const auto h = oracle::random_unit_series(rng, n_max, 4);
        ZSeries x = h;
        x[0] = GradedSPoly(4);
        // sum_{m=1..n_max} (-1)^{m+1} x^m / m
        ZSeries expected(n_max, 4);
        ZSeries power = x;
        for (int m = 1; m <= n_max; ++m) {
            expected += power * make_rational(m % 2 == 1 ? 1 : -1, m);
            power = kummer::zseries_mul(power, x);
        }
        EXPECT_EQ(kummer::zseries_log(h), expected);
    }
}

TEST(ZSeriesLog, ExpRoundTrip)
{
    std::mt19937 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = oracle::random_unit_series(rng, 5, 5);
        EXPECT_EQ(kummer::zseries_exp(kummer::zseries_log(h)), h);
    }
}

TEST(ZSeriesLog, ProductBecomesSum)
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        for (int n_max : {1, 3, 5}) {
            const auto a = oracle::random_unit_series(rng, n_max, 4);
            const auto b = oracle::random_unit_series(rng, n_max, 4);
            EXPECT_EQ(kummer::zseries_log(kummer::zseries_mul(a, b)), kummer::zseries_log(a) + kummer::zseries_log(b));
        }
    }
}

TEST(ZSeriesEulerSq, Examples)
{
    ZSeries h(3, 0);
    h[0] = GradedSPoly::one(0);
    h[1] = GradedSPoly::one(0);
    h[3] = GradedSPoly::one(0);
    const auto out = kummer::zseries_euler_sq(h);
    EXPECT_TRUE(out[0].is_zero());
    EXPECT_EQ(out[1], GradedSPoly::one(0));
    EXPECT_TRUE(out[2].is_zero());
    EXPECT_EQ(out[3], GradedSPoly::constant(9, 0));
}

TEST(Arithmetic, SumsAreOrderIndependent)
{
    std::mt19937 rng(14);
    std::vector<GradedSPoly> terms;
    for (int i = 0; i < 30; ++i) {
        terms.push_back(oracle::random_spoly(rng, 6, 8));
    }
    GradedSPoly forward(6);
    for (const auto &t : terms) {
        forward += t;
    }
    std::shuffle(terms.begin(), terms.end(), rng);
    GradedSPoly shuffled(6);
    for (const auto &t : terms) {
        shuffled += t;
    }
    EXPECT_EQ(forward, shuffled);
}
