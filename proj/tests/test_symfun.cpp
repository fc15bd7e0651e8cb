#include <array>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include <kummer/symfun.hpp>

#include "oracles/random_polys.hpp"
#include "oracles/symmetric_polys.hpp"

using kummer::ChernTable;
using kummer::GenusPreset;
using kummer::make_rational;
using kummer::Partition;
using kummer::PowerSumCombo;
using kummer::Rational;

namespace
{

PowerSumCombo combo(std::initializer_list<std::pair<Partition, Rational>> terms)
{
    PowerSumCombo c;
    for (const auto &[p, v] : terms) {
        c.add_term(p, v);
    }
    return c;
}

ChernTable surface(long c1sq, long c2)
{
    return ChernTable{2, {{Partition({1, 1}), Rational(c1sq)}, {Partition({2}), Rational(c2)}}};
}

// Chern numbers of X x Y for surfaces X, Y via c(X x Y) = c(X) c(Y).
// Classes are tracked as exponent vectors (a1, a2, b1, b2).
ChernTable product_of_surfaces(const ChernTable &x, const ChernTable &y)
{
    using Mono = std::array<int, 4>;
    using Poly = std::map<Mono, Rational>;
    auto mul = [](const Poly &p, const Poly &q) {
        Poly out;
        for (const auto &[m1, c1] : p) {
            for (const auto &[m2, c2] : q) {
                Mono m{};
                for (int i = 0; i < 4; ++i) {
                    m[static_cast<std::size_t>(i)] = m1[static_cast<std::size_t>(i)] + m2[static_cast<std::size_t>(i)];
                }
                out[m] += c1 * c2;
            }
        }
        return out;
    };
    const std::array<Poly, 5> c{
        Poly{{{0, 0, 0, 0}, 1}},
        Poly{{{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}},
        Poly{{{0, 1, 0, 0}, 1}, {{1, 0, 1, 0}, 1}, {{0, 0, 0, 1}, 1}},
        Poly{{{0, 1, 1, 0}, 1}, {{1, 0, 0, 1}, 1}},
        Poly{{{0, 1, 0, 1}, 1}},
    };
    auto integrate_surface = [](const ChernTable &t, int e1, int e2) -> Rational {
        if (e1 == 2 && e2 == 0) {
            return t.at(Partition({1, 1}));
        }
        if (e1 == 0 && e2 == 1) {
            return t.at(Partition({2}));
        }
        return 0;
    };
    ChernTable out{4, {}};
    for (const auto &mu : kummer::enumerate_partitions(4)) {
        Poly p = c[0];
        for (int part : mu.parts()) {
            p = mul(p, c[static_cast<std::size_t>(part)]);
        }
        Rational value = 0;
        for (const auto &[m, coeff] : p) {
            value += coeff * integrate_surface(x, m[0], m[1]) * integrate_surface(y, m[2], m[3]);
        }
        out.numbers.emplace(mu, value);
    }
    return out;
}

} // namespace

TEST(ElementaryInPowerBasis, NewtonIdentities)
{
    EXPECT_EQ(kummer::elementary_in_power_basis(1), combo({{Partition{1}, 1}}));
    EXPECT_EQ(kummer::elementary_in_power_basis(2),
              combo({{Partition({1, 1}), make_rational(1, 2)}, {Partition{2}, make_rational(-1, 2)}}));
    EXPECT_EQ(kummer::elementary_in_power_basis(3), combo({{Partition({1, 1, 1}), make_rational(1, 6)},
                                                           {Partition({2, 1}), make_rational(-1, 2)},
                                                           {Partition{3}, make_rational(1, 3)}}));
}

TEST(ElementaryProductInPowerBasis, Examples)
{
    EXPECT_EQ(kummer::elementary_product_in_power_basis(Partition{1}), combo({{Partition{1}, 1}}));
    EXPECT_EQ(kummer::elementary_product_in_power_basis(Partition({2, 1})),
              combo({{Partition({1, 1, 1}), make_rational(1, 2)}, {Partition({2, 1}), make_rational(-1, 2)}}));
    EXPECT_EQ(kummer::elementary_product_in_power_basis(Partition({2, 2})),
              combo({{Partition({1, 1, 1, 1}), make_rational(1, 4)},
                     {Partition({2, 1, 1}), make_rational(-1, 2)},
                     {Partition({2, 2}), make_rational(1, 4)}}));
    EXPECT_EQ(kummer::elementary_product_in_power_basis(Partition({2, 2})).homogeneous_degree(), 4);
}

TEST(Transitions, AgreeWithExplicitPolynomialsInEightVariables)
{
    constexpr int vars = 8;
    for (int d = 1; d <= 8; ++d) {
        for (const auto &mu : kummer::enumerate_partitions(d)) {
            const auto expected = oracle::product_of(mu.parts(), vars, oracle::elementary);
            oracle::Poly assembled;
            const auto e_expansion = kummer::elementary_product_in_power_basis(mu);
            for (const auto &[lambda, b] : e_expansion.terms()) {
                for (const auto &[e, c] : oracle::product_of(lambda.parts(), vars, oracle::power_sum)) {
                    oracle::add_to(assembled, e, b * c);
                }
            }
            EXPECT_EQ(assembled, expected) << "e_" << mu.to_string();

            const auto p_expected = oracle::product_of(mu.parts(), vars, oracle::power_sum);
            oracle::Poly p_assembled;
            const auto p_expansion = kummer::power_product_in_elementary_basis(mu);
            for (const auto &[nu, c] : p_expansion.terms()) {
                for (const auto &[e, v] : oracle::product_of(nu.parts(), vars, oracle::elementary)) {
                    oracle::add_to(p_assembled, e, c * v);
                }
            }
            EXPECT_EQ(p_assembled, p_expected) << "p_" << mu.to_string();
        }
    }
}

TEST(ChernFromPowerIntegrals, Examples)
{
    EXPECT_EQ(kummer::chern_from_power_integrals({{Partition({1, 1}), 9}, {Partition{2}, 3}}, 2), surface(9, 3));
    EXPECT_EQ(kummer::chern_from_power_integrals({{Partition({1, 1}), 0}, {Partition{2}, -48}}, 2), surface(0, 24));
    const ChernTable point{0, {{Partition{}, 1}}};
    EXPECT_EQ(kummer::chern_from_power_integrals({{Partition{}, 1}}, 0), point);
}

TEST(ChernFromPowerIntegrals, MissingKeyThrows)
{
    EXPECT_THROW(kummer::chern_from_power_integrals({{Partition({1, 1}), 9}}, 2), std::out_of_range);
}

TEST(PowerIntegralsFromChern, Examples)
{
    const kummer::PowerIntegrals p2{{Partition({1, 1}), 9}, {Partition{2}, 3}};
    EXPECT_EQ(kummer::power_integrals_from_chern(surface(9, 3)), p2);
    const kummer::PowerIntegrals k3{{Partition({1, 1}), 0}, {Partition{2}, -48}};
    EXPECT_EQ(kummer::power_integrals_from_chern(surface(0, 24)), k3);
}

TEST(PowerIntegralsFromChern, RoundTripUpToDegreeSixteen)
{
    std::mt19937 rng(99);
    for (int d = 0; d <= 16; ++d) {
        ChernTable t{d, {}};
        for (const auto &mu : kummer::enumerate_partitions(d)) {
            t.numbers.emplace(mu, oracle::random_rational(rng));
        }
        EXPECT_EQ(kummer::chern_from_power_integrals(kummer::power_integrals_from_chern(t), d), t) << "d=" << d;
    }
}

TEST(GenusPresets, LogCoefficients)
{
    const auto todd = kummer::genus_log_coefficients(GenusPreset::todd, 8);
    EXPECT_EQ(todd[0], make_rational(1, 2));
    EXPECT_EQ(todd[1], make_rational(-1, 24));
    EXPECT_EQ(todd[2], 0);
    EXPECT_EQ(todd[3], make_rational(1, 2880));
    EXPECT_EQ(todd[5], make_rational(-1, 181440));
    EXPECT_EQ(todd[7], make_rational(1, 9676800));

    const auto euler = kummer::genus_log_coefficients(GenusPreset::euler, 5);
    for (int j = 1; j <= 5; ++j) {
        EXPECT_EQ(euler[static_cast<std::size_t>(j - 1)], make_rational(j % 2 == 1 ? 1 : -1, j));
    }

    const auto signature = kummer::genus_log_coefficients(GenusPreset::signature, 8);
    EXPECT_EQ(signature[0], 0);
    EXPECT_EQ(signature[1], make_rational(1, 3));
    EXPECT_EQ(signature[3], make_rational(-7, 90));
    EXPECT_EQ(signature[5], make_rational(62, 2835));
    EXPECT_EQ(signature[7], make_rational(-127, 18900));
}

TEST(GenusPresets, ParseNames)
{
    EXPECT_EQ(kummer::parse_genus_preset("todd"), GenusPreset::todd);
    EXPECT_EQ(kummer::parse_genus_preset("signature"), GenusPreset::signature);
    EXPECT_FALSE(kummer::parse_genus_preset("ahat").has_value());
}

TEST(EvaluateGenus, Examples)
{
    const auto k3 = surface(0, 24);
    EXPECT_EQ(kummer::evaluate_genus(k3, kummer::genus_log_coefficients(GenusPreset::todd, 2)), 2);
    EXPECT_EQ(kummer::evaluate_genus(k3, kummer::genus_log_coefficients(GenusPreset::euler, 2)), 24);
    EXPECT_EQ(kummer::evaluate_genus(k3, kummer::genus_log_coefficients(GenusPreset::signature, 2)), -16);
    const ChernTable point{0, {{Partition{}, 1}}};
    for (auto preset : {GenusPreset::todd, GenusPreset::euler, GenusPreset::signature}) {
        EXPECT_EQ(kummer::evaluate_genus(point, kummer::genus_log_coefficients(preset, 0)), 1);
    }
    // P^2: Todd genus 1, signature 1.
    EXPECT_EQ(kummer::evaluate_genus(surface(9, 3), kummer::genus_log_coefficients(GenusPreset::todd, 2)), 1);
    EXPECT_EQ(kummer::evaluate_genus(surface(9, 3), kummer::genus_log_coefficients(GenusPreset::signature, 2)), 1);
}

TEST(EvaluateGenus, TooFewCoefficientsThrows)
{
    EXPECT_THROW(kummer::evaluate_genus(surface(9, 3), {Rational(1)}), std::invalid_argument);
}

TEST(EvaluateGenus, EulerPresetReturnsTopChernNumber)
{
    std::mt19937 rng(5);
    for (int d = 1; d <= 10; ++d) {
        ChernTable t{d, {}};
        for (const auto &mu : kummer::enumerate_partitions(d)) {
            t.numbers.emplace(mu, oracle::random_rational(rng));
        }
        EXPECT_EQ(kummer::evaluate_genus(t, kummer::genus_log_coefficients(GenusPreset::euler, d)), t.top());
    }
}

TEST(EvaluateGenus, LinearInTheTable)
{
    std::mt19937 rng(6);
    const int d = 6;
    std::vector<Rational> ell;
    for (int j = 0; j < d; ++j) {
        ell.push_back(oracle::random_rational(rng));
    }
    ChernTable a{d, {}};
    ChernTable b{d, {}};
    ChernTable sum{d, {}};
    for (const auto &mu : kummer::enumerate_partitions(d)) {
        const auto x = oracle::random_rational(rng);
        const auto y = oracle::random_rational(rng);
        a.numbers.emplace(mu, x);
        b.numbers.emplace(mu, y);
        sum.numbers.emplace(mu, x + 3 * y);
    }
    EXPECT_EQ(kummer::evaluate_genus(sum, ell), kummer::evaluate_genus(a, ell) + 3 * kummer::evaluate_genus(b, ell));
}

TEST(EvaluateGenus, MultiplicativeOnProductsOfSurfaces)
{
    std::mt19937 rng(8);
    const std::vector<ChernTable> surfaces{surface(9, 3), surface(8, 4), surface(0, 24), surface(-1, 13)};
    std::vector<std::vector<Rational>> genera{kummer::genus_log_coefficients(GenusPreset::todd, 4),
                                              kummer::genus_log_coefficients(GenusPreset::euler, 4),
                                              kummer::genus_log_coefficients(GenusPreset::signature, 4)};
    for (int i = 0; i < 3; ++i) {
        std::vector<Rational> ell;
        for (int j = 0; j < 4; ++j) {
            ell.push_back(oracle::random_rational(rng));
        }
        genera.push_back(ell);
    }
    for (const auto &x : surfaces) {
        for (const auto &y : surfaces) {
            const auto product = product_of_surfaces(x, y);
            for (const auto &ell : genera) {
                EXPECT_EQ(kummer::evaluate_genus(product, ell), kummer::evaluate_genus(x, ell) * kummer::evaluate_genus(y, ell));
            }
        }
    }
}

TEST(ChernKey, FormatAndParse)
{
    EXPECT_EQ(kummer::chern_key(Partition({4, 2, 2, 2})), "c2^3 c4");
    EXPECT_EQ(kummer::chern_key(Partition{14}), "c14");
    EXPECT_EQ(kummer::chern_key(Partition{}), "1");
    EXPECT_EQ(kummer::parse_chern_key("c2^3 c4"), Partition({4, 2, 2, 2}));
    EXPECT_EQ(kummer::parse_chern_key("1"), Partition{});
    EXPECT_THROW(kummer::parse_chern_key("x2"), std::invalid_argument);
    EXPECT_THROW(kummer::parse_chern_key("c2^"), std::invalid_argument);
    for (int d = 0; d <= 10; ++d) {
        for (const auto &mu : kummer::enumerate_partitions(d)) {
            EXPECT_EQ(kummer::parse_chern_key(kummer::chern_key(mu)), mu);
        }
    }
}
