#ifndef KUMMER_SYMFUN_HPP
#define KUMMER_SYMFUN_HPP

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <kummer/partitions.hpp>
#include <kummer/polyring.hpp>

namespace kummer
{

struct power_basis_tag {
};
struct elementary_basis_tag {
};

// Linear combination of products b_lambda = b_{lambda_1} b_{lambda_2} ... of
// generators of a multiplicative basis of the symmetric functions. Products of
// basis elements are partition concatenation.
template <typename Tag>
class BasisCombo
{
public:
    using term_map = std::map<Partition, Rational>;

    BasisCombo() = default;

    static BasisCombo unit()
    {
        BasisCombo c;
        c.add_term(Partition{}, Rational(1));
        return c;
    }
    static BasisCombo generator(int r)
    {
        BasisCombo c;
        c.add_term(Partition({r}), Rational(1));
        return c;
    }

    const term_map &terms() const noexcept
    {
        return terms_;
    }
    Rational coeff(const Partition &lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition &lambda, const Rational &c)
    {
        if (sgn(c) == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                terms_.erase(it);
            }
        }
    }

    // Common size of all keys, or nullopt when mixed (or empty).
    std::optional<int> homogeneous_degree() const
    {
        std::optional<int> deg;
        for (const auto &[lambda, c] : terms_) {
            if (deg && *deg != lambda.size()) {
                return std::nullopt;
            }
            deg = lambda.size();
        }
        return deg;
    }

    BasisCombo &operator+=(const BasisCombo &o)
    {
        for (const auto &[lambda, c] : o.terms_) {
            add_term(lambda, c);
        }
        return *this;
    }
    BasisCombo &operator*=(const Rational &c)
    {
        if (sgn(c) == 0) {
            terms_.clear();
        }
        for (auto &[lambda, v] : terms_) {
            v *= c;
        }
        return *this;
    }
    friend BasisCombo operator+(BasisCombo a, const BasisCombo &b)
    {
        a += b;
        return a;
    }
    friend BasisCombo operator*(BasisCombo a, const Rational &c)
    {
        a *= c;
        return a;
    }
    friend BasisCombo operator*(const BasisCombo &a, const BasisCombo &b)
    {
        BasisCombo out;
        for (const auto &[la, ca] : a.terms_) {
            for (const auto &[lb, cb] : b.terms_) {
                out.add_term(la.concat(lb), ca * cb);
            }
        }
        return out;
    }
    friend bool operator==(const BasisCombo &, const BasisCombo &) = default;

private:
    term_map terms_;
};

using PowerSumCombo = BasisCombo<power_basis_tag>;
using ElementaryCombo = BasisCombo<elementary_basis_tag>;

namespace detail
{

// Newton's identities, memoized per degree. Entries are only ever appended.
template <typename Result, typename Step>
Result newton_cached(int r, std::vector<Result> &cache, std::mutex &mutex, Step step)
{
    std::lock_guard lock(mutex);
    while (static_cast<int>(cache.size()) <= r) {
        cache.push_back(step(static_cast<int>(cache.size()), cache));
    }
    return cache[static_cast<std::size_t>(r)];
}

} // namespace detail

// e_r = (1/r) sum_{i=1..r} (-1)^{i-1} e_{r-i} p_i, with e_0 = 1.
inline PowerSumCombo elementary_in_power_basis(int r)
{
    if (r < 0) {
        throw std::invalid_argument("elementary_in_power_basis: negative degree");
    }
    static std::vector<PowerSumCombo> cache;
    static std::mutex mutex;
    return detail::newton_cached(r, cache, mutex, [](int deg, const std::vector<PowerSumCombo> &lower) {
        if (deg == 0) {
            return PowerSumCombo::unit();
        }
        PowerSumCombo e;
        for (int i = 1; i <= deg; ++i) {
            const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
            e += lower[static_cast<std::size_t>(deg - i)] * PowerSumCombo::generator(i) * sign;
        }
        return e * make_rational(1, deg);
    });
}

// p_r = sum_{i=1..r-1} (-1)^{i-1} e_i p_{r-i} + (-1)^{r-1} r e_r.
inline ElementaryCombo power_in_elementary_basis(int r)
{
    if (r < 1) {
        throw std::invalid_argument("power_in_elementary_basis: degree must be positive");
    }
    static std::vector<ElementaryCombo> cache;
    static std::mutex mutex;
    return detail::newton_cached(r, cache, mutex, [](int deg, const std::vector<ElementaryCombo> &lower) {
        // slot 0 is never read (p_0 is not a generator)
        if (deg == 0) {
            return ElementaryCombo{};
        }
        ElementaryCombo p;
        for (int i = 1; i < deg; ++i) {
            const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
            p += ElementaryCombo::generator(i) * lower[static_cast<std::size_t>(deg - i)] * sign;
        }
        const Rational sign = (deg % 2 == 1) ? Rational(1) : Rational(-1);
        p += ElementaryCombo::generator(deg) * (sign * deg);
        return p;
    });
}

inline PowerSumCombo elementary_product_in_power_basis(const Partition &mu)
{
    PowerSumCombo out = PowerSumCombo::unit();
    for (int part : mu.parts()) {
        out = out * elementary_in_power_basis(part);
    }
    return out;
}

inline ElementaryCombo power_product_in_elementary_basis(const Partition &lambda)
{
    ElementaryCombo out = ElementaryCombo::unit();
    for (int part : lambda.parts()) {
        out = out * power_in_elementary_basis(part);
    }
    return out;
}

// Chern numbers of one compact complex manifold. degree is the complex
// dimension; key mu stands for the integral of c_{mu_1} c_{mu_2} ...
struct ChernTable {
    int degree = 0;
    std::map<Partition, Rational> numbers;

    const Rational &at(const Partition &mu) const
    {
        auto it = numbers.find(mu);
        if (it == numbers.end()) {
            throw std::out_of_range("ChernTable: no entry for " + mu.to_string());
        }
        return it->second;
    }

    // Top Chern number, i.e. the Euler characteristic.
    const Rational &top() const
    {
        return degree == 0 ? at(Partition{}) : at(Partition({degree}));
    }

    bool all_integral() const
    {
        for (const auto &[mu, v] : numbers) {
            if (v.get_den() != 1) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const ChernTable &, const ChernTable &) = default;
};

using PowerIntegrals = std::map<Partition, Rational>;

// N_mu = sum_lambda B_{mu lambda} P_lambda where e_mu = sum_lambda B_{mu lambda} p_lambda.
inline ChernTable chern_from_power_integrals(const PowerIntegrals &p, int d)
{
    ChernTable table{d, {}};
    const auto partitions = enumerate_partitions(d);
    for (const auto &lambda : partitions) {
        if (!p.contains(lambda)) {
            throw std::out_of_range("chern_from_power_integrals: missing power integral for " + lambda.to_string());
        }
    }
    for (const auto &mu : partitions) {
        Rational n = 0;
        const PowerSumCombo expansion = elementary_product_in_power_basis(mu);
        for (const auto &[lambda, b] : expansion.terms()) {
            n += b * p.at(lambda);
        }
        table.numbers.emplace(mu, n);
    }
    return table;
}

inline PowerIntegrals power_integrals_from_chern(const ChernTable &n)
{
    PowerIntegrals out;
    for (const auto &lambda : enumerate_partitions(n.degree)) {
        Rational v = 0;
        const ElementaryCombo expansion = power_product_in_elementary_basis(lambda);
        for (const auto &[mu, c] : expansion.terms()) {
            v += c * n.at(mu);
        }
        out.emplace(lambda, v);
    }
    return out;
}

// Genus of a manifold with prod_i f(gamma_i) = exp(sum_j ell_j p_j(gamma)),
// where log_coeffs[j-1] = ell_j. Needs ell_j for j up to the complex dimension.
inline Rational evaluate_genus(const ChernTable &n, const std::vector<Rational> &log_coeffs)
{
    if (static_cast<int>(log_coeffs.size()) < n.degree) {
        throw std::invalid_argument("evaluate_genus: need " + std::to_string(n.degree) + " log-coefficients, got "
                                    + std::to_string(log_coeffs.size()));
    }
    const PowerIntegrals p = power_integrals_from_chern(n);
    Rational value = 0;
    for (const auto &[lambda, integral] : p) {
        Rational weight = 1;
        for (int part : lambda.parts()) {
            weight *= log_coeffs[static_cast<std::size_t>(part - 1)];
        }
        weight /= SMonomial(lambda).automorphism_factor();
        value += weight * integral;
    }
    return value;
}

enum class GenusPreset { todd, euler, signature };

inline std::optional<GenusPreset> parse_genus_preset(std::string_view name)
{
    if (name == "todd") {
        return GenusPreset::todd;
    }
    if (name == "euler") {
        return GenusPreset::euler;
    }
    if (name == "signature") {
        return GenusPreset::signature;
    }
    return std::nullopt;
}

// Coefficients ell_1..ell_count of log f for the preset's characteristic
// series f, computed from exact power series.
inline std::vector<Rational> genus_log_coefficients(GenusPreset preset, int count)
{
    if (count < 0) {
        throw std::invalid_argument("genus_log_coefficients: negative count");
    }
    // Scalar series: weight cap 0 leaves only constants.
    ZSeries series(count, 0);
    auto set = [&series](int j, const Rational &v) { series[j] = GradedSPoly::constant(v, 0); };
    ZSeries log_f(count, 0);
    switch (preset) {
    case GenusPreset::todd:
        // f = x / (1 - e^{-x});  (1 - e^{-x}) / x = sum_j (-1)^j x^j / (j+1)!
        for (int j = 0; j <= count; ++j) {
            set(j, Rational((j % 2 == 0 ? 1 : -1)) / Rational(factorial(j + 1)));
        }
        log_f = zseries_log(series) * Rational(-1);
        break;
    case GenusPreset::euler:
        // f = 1 + x
        set(0, Rational(1));
        if (count >= 1) {
            set(1, Rational(1));
        }
        log_f = zseries_log(series);
        break;
    case GenusPreset::signature: {
        // f = x / tanh x = cosh x / (sinh x / x)
        ZSeries sinh_over_x(count, 0);
        for (int j = 0; j <= count; j += 2) {
            set(j, Rational(1) / Rational(factorial(j)));
            sinh_over_x[j] = GradedSPoly::constant(Rational(1) / Rational(factorial(j + 1)), 0);
        }
        log_f = zseries_log(series) - zseries_log(sinh_over_x);
        break;
    }
    }
    std::vector<Rational> ell;
    for (int j = 1; j <= count; ++j) {
        ell.push_back(log_f[j].coeff(SMonomial{}));
    }
    return ell;
}

// "c2^3 c4": ascending parts with caret exponents; the empty partition is "1".
inline std::string chern_key(const Partition &mu)
{
    if (mu.empty()) {
        return "1";
    }
    const auto mult = mu.multiplicities();
    std::string key;
    for (std::size_t j = 1; j < mult.size(); ++j) {
        if (mult[j] == 0) {
            continue;
        }
        if (!key.empty()) {
            key += " ";
        }
        key += "c" + std::to_string(j);
        if (mult[j] > 1) {
            key += "^" + std::to_string(mult[j]);
        }
    }
    return key;
}

inline Partition parse_chern_key(std::string_view key)
{
    if (key == "1") {
        return Partition{};
    }
    std::vector<int> parts;
    std::istringstream in{std::string(key)};
    std::string token;
    while (in >> token) {
        if (token.size() < 2 || token[0] != 'c') {
            throw std::invalid_argument("bad Chern key token '" + token + "'");
        }
        const auto caret = token.find('^');
        try {
            std::size_t used = 0;
            const std::string index_text = token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
            const int index = std::stoi(index_text, &used);
            if (used != index_text.size() || index < 1) {
                throw std::invalid_argument("index");
            }
            int exponent = 1;
            if (caret != std::string::npos) {
                const std::string exp_text = token.substr(caret + 1);
                exponent = std::stoi(exp_text, &used);
                if (used != exp_text.size() || exponent < 1) {
                    throw std::invalid_argument("exponent");
                }
            }
            parts.insert(parts.end(), static_cast<std::size_t>(exponent), index);
        } catch (const std::logic_error &) {
            throw std::invalid_argument("bad Chern key token '" + token + "'");
        }
    }
    if (parts.empty()) {
        throw std::invalid_argument("empty Chern key");
    }
    return Partition::from_multiset(std::move(parts));
}

} // namespace kummer

#endif
