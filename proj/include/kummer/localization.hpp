#ifndef KUMMER_LOCALIZATION_HPP
#define KUMMER_LOCALIZATION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <kummer/errors.hpp>
#include <kummer/partitions.hpp>
#include <kummer/polyring.hpp>

namespace kummer
{

enum class SurfaceKind { p2, p1xp1 };

inline std::string surface_name(SurfaceKind kind)
{
    return kind == SurfaceKind::p2 ? "p2" : "p1xp1";
}

inline std::optional<SurfaceKind> parse_surface(std::string_view name)
{
    if (name == "p2") {
        return SurfaceKind::p2;
    }
    if (name == "p1xp1") {
        return SurfaceKind::p1xp1;
    }
    return std::nullopt;
}

// Tangent weights of the two affine coordinates at a torus-fixed point.
struct ChartWeights {
    long v1;
    long v2;

    friend bool operator==(const ChartWeights &, const ChartWeights &) = default;
};

// A toric surface with its torus weights evaluated at an integer parameter
// pair (a, b). One chart per torus-fixed point.
struct SurfaceModel {
    SurfaceKind kind;
    std::vector<ChartWeights> charts;
    int c1sq;
    int c2;
    std::pair<long, long> weight_params;

    std::string name() const
    {
        return surface_name(kind);
    }
};

// P^2 with homogeneous-coordinate weights (0, a, b); P^1 x P^1 with factor
// weights a and b. Throws genericity_error if a chart weight vanishes.
inline SurfaceModel build_surface_model(SurfaceKind kind, long a, long b)
{
    if (a == 0 && b == 0) {
        throw genericity_error("torus parameters (0, 0) are degenerate");
    }
    SurfaceModel model{kind, {}, 0, 0, {a, b}};
    switch (kind) {
    case SurfaceKind::p2:
        model.charts = {{a, b}, {-a, b - a}, {-b, a - b}};
        model.c1sq = 9;
        model.c2 = 3;
        break;
    case SurfaceKind::p1xp1:
        model.charts = {{a, b}, {-a, b}, {a, -b}, {-a, -b}};
        model.c1sq = 8;
        model.c2 = 4;
        break;
    }
    for (std::size_t i = 0; i < model.charts.size(); ++i) {
        if (model.charts[i].v1 == 0 || model.charts[i].v2 == 0) {
            throw genericity_error("chart " + std::to_string(i) + " of " + model.name() + " has a zero weight at (a, b) = ("
                                   + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
    }
    return model;
}

// Weights of the tangent space Hom(I, O/I) at the monomial ideal of lambda,
// where row r, column c of the diagram is the monomial x^c y^r and x, y carry
// the chart weights v1, v2. Two weights per cell:
//   (arm + 1) v1 - leg v2   and   -arm v1 + (leg + 1) v2.
inline std::vector<long> tangent_weights(const ChartWeights &chart, const Partition &lambda)
{
    if (chart.v1 == 0 || chart.v2 == 0) {
        throw genericity_error("chart weight is zero");
    }
    std::vector<long> weights;
    weights.reserve(2 * static_cast<std::size_t>(lambda.size()));
    for (const auto &cell : cell_hooks(lambda)) {
        const long w1 = (cell.arm + 1) * chart.v1 - cell.leg * chart.v2;
        const long w2 = -cell.arm * chart.v1 + (cell.leg + 1) * chart.v2;
        if (w1 == 0 || w2 == 0) {
            throw genericity_error("zero tangent weight at " + lambda.to_string() + " for chart weights ("
                                   + std::to_string(chart.v1) + ", " + std::to_string(chart.v2) + ")");
        }
        weights.push_back(w1);
        weights.push_back(w2);
    }
    return weights;
}

// A torus-fixed point of X^[k]: one partition per chart.
struct FixedPoint {
    std::vector<Partition> assignment;

    int total() const
    {
        int k = 0;
        for (const auto &p : assignment) {
            k += p.size();
        }
        return k;
    }
};

inline std::vector<FixedPoint> fixed_points(const SurfaceModel &model, int k)
{
    std::vector<FixedPoint> out;
    for (auto &tuple : multipartitions(k, static_cast<int>(model.charts.size()))) {
        out.push_back(FixedPoint{std::move(tuple)});
    }
    return out;
}

struct TangentData {
    std::vector<long> weights;
    BigInt euler_product;
    // power_sums[j - 1] = sum_i weights_i^j for 1 <= j <= weights.size()
    std::vector<BigInt> power_sums;
};

inline TangentData tangent_data(const FixedPoint &fp, const SurfaceModel &model)
{
    if (fp.assignment.size() != model.charts.size()) {
        throw std::invalid_argument("fixed point has " + std::to_string(fp.assignment.size()) + " slots, surface has "
                                    + std::to_string(model.charts.size()) + " charts");
    }
    TangentData data;
    for (std::size_t i = 0; i < model.charts.size(); ++i) {
        auto w = tangent_weights(model.charts[i], fp.assignment[i]);
        data.weights.insert(data.weights.end(), w.begin(), w.end());
    }
    data.euler_product = 1;
    std::vector<BigInt> powers(data.weights.size(), BigInt(1));
    data.power_sums.assign(data.weights.size(), BigInt(0));
    for (std::size_t i = 0; i < data.weights.size(); ++i) {
        data.euler_product *= data.weights[i];
    }
    for (std::size_t j = 0; j < data.weights.size(); ++j) {
        for (std::size_t i = 0; i < data.weights.size(); ++i) {
            powers[i] *= data.weights[i];
            data.power_sums[j] += powers[i];
        }
    }
    return data;
}

// Localized integrand of the deformed universal genus at one fixed point:
// exp(sum_j (s_j + t [j = 1]) q_j u^j) / euler_product, with u-degree cap 2k
// and s-weight cap weight_cap.
inline UPoly fixed_point_contribution(const FixedPoint &fp, const SurfaceModel &model, long t, int weight_cap)
{
    const int top = 2 * fp.total();
    const TangentData data = tangent_data(fp, model);

    UPoly exponent(top, weight_cap);
    for (int j = 1; j <= top; ++j) {
        const BigInt &q = data.power_sums[static_cast<std::size_t>(j - 1)];
        exponent[j].add_term(SMonomial::single(j), Rational(q));
        if (j == 1 && t != 0) {
            exponent[j].add_term(SMonomial{}, Rational(BigInt(q * t)));
        }
    }
    UPoly result = exp_truncated(exponent);
    result *= make_rational(BigInt(1), data.euler_product);
    return result;
}

// Sum of all fixed-point contributions of X^[k], still graded by u.
inline UPoly localized_sum(const SurfaceModel &model, int k, long t, int weight_cap)
{
    UPoly total(2 * k, weight_cap);
    for (const auto &fp : fixed_points(model, k)) {
        total += fixed_point_contribution(fp, model, t, weight_cap);
    }
    return total;
}

// Value of the deformed universal genus on X^[k]: the degree-2k part of the
// localized sum. All lower u-degrees must cancel exactly.
inline GradedSPoly hilbert_genus(const SurfaceModel &model, int k, long t, int weight_cap)
{
    if (k < 0) {
        throw std::invalid_argument("hilbert_genus: negative k");
    }
    if (k == 0) {
        return GradedSPoly::one(weight_cap);
    }
    UPoly total = localized_sum(model, k, t, weight_cap);
    for (int j = 0; j < 2 * k; ++j) {
        if (!total[j].is_zero()) {
            throw validation_error("localization: u^" + std::to_string(j) + " part of X^[" + std::to_string(k)
                                   + "] does not cancel (t = " + std::to_string(t) + "): " + total[j].to_string());
        }
    }
    return total[2 * k];
}

} // namespace kummer

#endif
