#ifndef KUMMER_ASSEMBLY_HPP
#define KUMMER_ASSEMBLY_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <kummer/errors.hpp>
#include <kummer/localization.hpp>
#include <kummer/partitions.hpp>
#include <kummer/polyring.hpp>
#include <kummer/symfun.hpp>

namespace kummer
{

// Raised when every parameter pair of the retry schedule was degenerate.
class genericity_exhausted : public genericity_error
{
public:
    using genericity_error::genericity_error;
};

// Default torus parameters for computations up to n points: (1, n^2 + n + 1).
inline std::pair<long, long> default_weight_params(int n)
{
    return {1, static_cast<long>(n) * n + n + 1};
}

inline constexpr int weight_retry_limit = 64;

// Runs fn(model) on a generic model. With explicit weights there is exactly
// one attempt; otherwise b is incremented after each genericity failure.
template <typename Fn>
auto with_generic_model(SurfaceKind kind, int n, std::optional<std::pair<long, long>> weights, Fn fn)
{
    const bool fixed = weights.has_value();
    auto [a, b] = weights.value_or(default_weight_params(n));
    std::string last_error;
    for (int attempt = 0; attempt < (fixed ? 1 : weight_retry_limit); ++attempt, ++b) {
        try {
            return fn(build_surface_model(kind, a, b));
        } catch (const genericity_error &e) {
            last_error = e.what();
        }
    }
    throw genericity_exhausted("no generic torus parameters found for " + surface_name(kind) + ": " + last_error);
}

// Weight cap for the Kummer series up to z^n_max.
inline int kummer_weight_cap(int n_max)
{
    return std::max(0, 2 * (n_max - 1));
}

// sum_k phi_t(X^[k]) z^k for k <= n_max.
inline ZSeries hilbert_genus_series(const SurfaceModel &model, int n_max, long t, int weight_cap)
{
    ZSeries h(n_max, weight_cap);
    for (int k = 0; k <= n_max; ++k) {
        h[k] = hilbert_genus(model, k, t, weight_cap);
    }
    return h;
}

// 1/c1^2 (z d/dz)^2 [ln H_{+1} + ln H_{-1} - 2 ln H_0], where H_t is the
// deformed Hilbert series. Each z^n coefficient is checked to be homogeneous
// of weight 2(n-1) and then projected to that weight.
inline ZSeries kummer_genus_series(const SurfaceModel &model, int n_max)
{
    if (model.c1sq == 0) {
        throw std::invalid_argument("kummer_genus_series: surface has c1^2 = 0");
    }
    const int cap = kummer_weight_cap(n_max);
    ZSeries combined = zseries_log(hilbert_genus_series(model, n_max, 1, cap));
    combined += zseries_log(hilbert_genus_series(model, n_max, -1, cap));
    combined -= zseries_log(hilbert_genus_series(model, n_max, 0, cap)) * Rational(2);
    ZSeries k = zseries_euler_sq(combined) * make_rational(1, model.c1sq);

    for (int n = 1; n <= n_max; ++n) {
        const int w = 2 * (n - 1);
        GradedSPoly projected = k[n].weight_component(w);
        if (projected != k[n]) {
            throw validation_error("Kummer series: z^" + std::to_string(n) + " coefficient is not homogeneous of weight "
                                   + std::to_string(w) + ": " + (k[n] - projected).to_string());
        }
    }
    return k;
}

// P_lambda = [s_lambda] * prod_j m_j(lambda)!, for every lambda of size d.
inline PowerIntegrals power_integrals_of(const GradedSPoly &genus_value, int d)
{
    PowerIntegrals p;
    for (const auto &lambda : enumerate_partitions(d)) {
        const SMonomial m(lambda);
        p.emplace(lambda, genus_value.coeff(m) * Rational(m.automorphism_factor()));
    }
    return p;
}

struct KummerResult {
    int n = 1;
    int dimension = 0;
    std::string surface;
    ChernTable chern;
    // Divisibility or positivity misses beyond the verified range n <= 8.
    std::vector<std::string> advisories;
};

inline constexpr int kummer_verified_range = 8;

// Integrality, vanishing of odd-part numbers, positivity and n^3-divisibility.
// The last two are hard failures only for n <= kummer_verified_range.
inline void validate_kummer_result(KummerResult &r)
{
    const BigInt n_cubed = BigInt(r.n) * r.n * r.n;
    auto fail = [&r](const Partition &mu, const std::string &what) {
        throw validation_error("A^[[" + std::to_string(r.n) + "]], " + chern_key(mu) + ": " + what);
    };
    for (const auto &[mu, value] : r.chern.numbers) {
        if (value.get_den() != 1) {
            fail(mu, "not an integer (" + value.get_str() + ")");
        }
        if (mu.has_odd_part()) {
            if (sgn(value) != 0) {
                fail(mu, "odd-part Chern number is " + value.get_str() + ", expected 0");
            }
            continue;
        }
        std::string problem;
        if (sgn(value) <= 0) {
            problem = "not positive (" + value.get_str() + ")";
        } else if (!mpz_divisible_p(value.get_num().get_mpz_t(), n_cubed.get_mpz_t())) {
            problem = "not divisible by n^3 (" + value.get_str() + ")";
        }
        if (!problem.empty()) {
            if (r.n <= kummer_verified_range) {
                fail(mu, problem);
            }
            r.advisories.push_back(chern_key(mu) + ": " + problem);
        }
    }
}

// Chern numbers of A^[[n]] for n = 1..n_max, from one assembled series.
inline std::vector<KummerResult> kummer_results(const SurfaceModel &model, int n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("kummer_results: n_max must be at least 1");
    }
    const ZSeries k = kummer_genus_series(model, n_max);
    std::vector<KummerResult> out;
    for (int n = 1; n <= n_max; ++n) {
        const int d = 2 * (n - 1);
        KummerResult r{n, d, model.name(), chern_from_power_integrals(power_integrals_of(k[n], d), d), {}};
        validate_kummer_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

inline KummerResult kummer_chern_numbers(const SurfaceModel &model, int n)
{
    return kummer_results(model, n).back();
}

// Chern numbers of X^[k] by localization at t = 0 with weight cap 2k.
inline ChernTable hilbert_chern_numbers(const SurfaceModel &model, int k)
{
    const int d = 2 * k;
    const GradedSPoly value = hilbert_genus(model, k, 0, d);
    if (value.weight_component(d) != value) {
        throw validation_error("X^[" + std::to_string(k) + "]: genus value is not homogeneous of weight "
                               + std::to_string(d));
    }
    ChernTable table = chern_from_power_integrals(power_integrals_of(value, d), d);
    for (const auto &[mu, v] : table.numbers) {
        if (v.get_den() != 1) {
            throw validation_error("X^[" + std::to_string(k) + "], " + chern_key(mu) + ": not an integer ("
                                   + v.get_str() + ")");
        }
    }
    return table;
}

struct QuadraticCheckReport {
    bool passed = true;
    std::vector<std::string> failures;
};

inline constexpr std::array<long, 5> quadratic_check_shifts{-2, -1, 0, 1, 2};

// The five series ln phi_m(H_X), m = -2..2, must be quadratic in m: both third
// finite differences vanish coefficient by coefficient.
inline QuadraticCheckReport third_difference_check(const std::array<ZSeries, 5> &logs)
{
    QuadraticCheckReport report;
    for (int start = 0; start + 3 < 5; ++start) {
        ZSeries diff = logs[static_cast<std::size_t>(start + 3)];
        diff -= logs[static_cast<std::size_t>(start + 2)] * Rational(3);
        diff += logs[static_cast<std::size_t>(start + 1)] * Rational(3);
        diff -= logs[static_cast<std::size_t>(start)];
        for (int n = 0; n <= diff.n_max(); ++n) {
            if (!diff[n].is_zero()) {
                report.passed = false;
                report.failures.push_back("third difference at m = " + std::to_string(quadratic_check_shifts[static_cast<std::size_t>(start)])
                                          + ", z^" + std::to_string(n) + ": " + diff[n].to_string());
            }
        }
    }
    return report;
}

inline std::array<ZSeries, 5> deformed_log_series(const SurfaceModel &model, int n_max, int weight_cap)
{
    std::array<ZSeries, 5> logs{ZSeries(n_max, weight_cap), ZSeries(n_max, weight_cap), ZSeries(n_max, weight_cap),
                                ZSeries(n_max, weight_cap), ZSeries(n_max, weight_cap)};
    for (std::size_t i = 0; i < logs.size(); ++i) {
        logs[i] = zseries_log(hilbert_genus_series(model, n_max, quadratic_check_shifts[i], weight_cap));
    }
    return logs;
}

// Untruncated (weight cap 2 n_max) check of the quadratic-in-m law.
inline QuadraticCheckReport universal_series_quadratic_check(const SurfaceModel &model, int n_max)
{
    return third_difference_check(deformed_log_series(model, n_max, 2 * n_max));
}

} // namespace kummer

#endif
