#ifndef KUMMER_POLYRING_HPP
#define KUMMER_POLYRING_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <kummer/errors.hpp>
#include <kummer/partitions.hpp>

namespace kummer
{

using BigInt = mpz_class;
// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt factorial(int n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// A monomial s_{j1} s_{j2} ... in the log-coefficient variables, stored as the
// multiset of subscripts. Its weight is the sum of the subscripts.
class SMonomial
{
public:
    SMonomial() = default;
    explicit SMonomial(Partition indices) : indices_(std::move(indices)), weight_(indices_.size()) {}

    static SMonomial single(int j)
    {
        return SMonomial(Partition({j}));
    }

    const Partition &indices() const noexcept
    {
        return indices_;
    }
    int weight() const noexcept
    {
        return weight_;
    }
    bool is_one() const noexcept
    {
        return indices_.empty();
    }

    // prod_j m_j! over the multiplicities m_j of the subscripts.
    BigInt automorphism_factor() const
    {
        BigInt f = 1;
        for (int m : indices_.multiplicities()) {
            f *= factorial(m);
        }
        return f;
    }

    friend SMonomial operator*(const SMonomial &a, const SMonomial &b)
    {
        return SMonomial(a.indices_.concat(b.indices_));
    }

    friend bool operator==(const SMonomial &a, const SMonomial &b)
    {
        return a.indices_ == b.indices_;
    }
    friend auto operator<=>(const SMonomial &a, const SMonomial &b)
    {
        return a.indices_ <=> b.indices_;
    }

    // "1", "s1^2 s2", ...
    std::string to_string() const
    {
        if (indices_.empty()) {
            return "1";
        }
        std::string s;
        const auto mult = indices_.multiplicities();
        for (std::size_t j = 1; j < mult.size(); ++j) {
            if (mult[j] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += " ";
            }
            s += "s" + std::to_string(j);
            if (mult[j] > 1) {
                s += "^" + std::to_string(mult[j]);
            }
        }
        return s;
    }

private:
    Partition indices_;
    int weight_ = 0;
};

// Polynomial in s_1, s_2, ... over the rationals, truncated above a fixed
// total weight. Arithmetic happens in the quotient by all monomials of weight
// above the cap, which is a ring homomorphism, so truncation commutes with
// every operation below.
class GradedSPoly
{
public:
    using term_map = std::map<SMonomial, Rational>;

    explicit GradedSPoly(int weight_cap = 0) : cap_(weight_cap)
    {
        if (weight_cap < 0) {
            throw std::invalid_argument("negative weight cap");
        }
    }

    static GradedSPoly constant(const Rational &c, int weight_cap)
    {
        GradedSPoly p(weight_cap);
        p.add_term(SMonomial{}, c);
        return p;
    }
    static GradedSPoly one(int weight_cap)
    {
        return constant(Rational(1), weight_cap);
    }
    static GradedSPoly term(const SMonomial &m, const Rational &c, int weight_cap)
    {
        GradedSPoly p(weight_cap);
        p.add_term(m, c);
        return p;
    }

    int weight_cap() const noexcept
    {
        return cap_;
    }
    const term_map &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    std::size_t term_count() const noexcept
    {
        return terms_.size();
    }

    Rational coeff(const SMonomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Adds c * m; terms above the cap are discarded, zeros are never stored.
    void add_term(const SMonomial &m, const Rational &c)
    {
        if (m.weight() > cap_ || sgn(c) == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                terms_.erase(it);
            }
        }
    }

    // Part of exact weight w.
    GradedSPoly weight_component(int w) const
    {
        GradedSPoly out(cap_);
        for (const auto &[m, c] : terms_) {
            if (m.weight() == w) {
                out.terms_.emplace(m, c);
            }
        }
        return out;
    }

    // Same terms viewed under another cap (drops anything above it).
    GradedSPoly with_cap(int new_cap) const
    {
        GradedSPoly out(new_cap);
        for (const auto &[m, c] : terms_) {
            out.add_term(m, c);
        }
        return out;
    }

    GradedSPoly &operator+=(const GradedSPoly &o)
    {
        check_cap(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    GradedSPoly &operator-=(const GradedSPoly &o)
    {
        check_cap(o);
        for (const auto &[m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }
    GradedSPoly &operator*=(const Rational &c)
    {
        if (sgn(c) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[m, v] : terms_) {
            v *= c;
        }
        return *this;
    }

    friend GradedSPoly operator+(GradedSPoly a, const GradedSPoly &b)
    {
        a += b;
        return a;
    }
    friend GradedSPoly operator-(GradedSPoly a, const GradedSPoly &b)
    {
        a -= b;
        return a;
    }
    friend GradedSPoly operator-(GradedSPoly a)
    {
        for (auto &[m, v] : a.terms_) {
            v = -v;
        }
        return a;
    }
    friend GradedSPoly operator*(GradedSPoly a, const Rational &c)
    {
        a *= c;
        return a;
    }
    friend GradedSPoly operator*(const Rational &c, GradedSPoly a)
    {
        a *= c;
        return a;
    }

    friend bool operator==(const GradedSPoly &a, const GradedSPoly &b)
    {
        return a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string s;
        for (const auto &[m, c] : terms_) {
            if (!s.empty()) {
                s += " + ";
            }
            s += "(" + c.get_str() + ")";
            if (!m.is_one()) {
                s += "*" + m.to_string();
            }
        }
        return s;
    }

    friend std::ostream &operator<<(std::ostream &os, const GradedSPoly &p)
    {
        return os << p.to_string();
    }

private:
    void check_cap(const GradedSPoly &o) const
    {
        if (o.cap_ != cap_) {
            throw truncation_mismatch("GradedSPoly weight caps differ");
        }
    }

    int cap_ = 0;
    term_map terms_;
};

inline GradedSPoly spoly_mul(const GradedSPoly &a, const GradedSPoly &b)
{
    if (a.weight_cap() != b.weight_cap()) {
        throw truncation_mismatch("spoly_mul: weight caps differ");
    }
    const int cap = a.weight_cap();
    GradedSPoly out(cap);
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            if (ma.weight() + mb.weight() > cap) {
                continue;
            }
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

inline GradedSPoly operator*(const GradedSPoly &a, const GradedSPoly &b)
{
    return spoly_mul(a, b);
}

// Polynomial in an auxiliary variable u with GradedSPoly coefficients,
// truncated above u-degree degree_cap. u tracks cohomological degree.
class UPoly
{
public:
    UPoly(int degree_cap, int weight_cap)
        : coeffs_(static_cast<std::size_t>(check_degree(degree_cap)) + 1, GradedSPoly(weight_cap)), weight_cap_(weight_cap)
    {
    }

    int degree_cap() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    int weight_cap() const noexcept
    {
        return weight_cap_;
    }
    const GradedSPoly &operator[](int d) const
    {
        return coeffs_.at(static_cast<std::size_t>(d));
    }
    GradedSPoly &operator[](int d)
    {
        return coeffs_.at(static_cast<std::size_t>(d));
    }
    const std::vector<GradedSPoly> &coeffs() const noexcept
    {
        return coeffs_;
    }

    UPoly &operator+=(const UPoly &o)
    {
        check_shape(o);
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            coeffs_[d] += o.coeffs_[d];
        }
        return *this;
    }
    UPoly &operator*=(const Rational &c)
    {
        for (auto &p : coeffs_) {
            p *= c;
        }
        return *this;
    }

    friend bool operator==(const UPoly &a, const UPoly &b)
    {
        return a.weight_cap_ == b.weight_cap_ && a.coeffs_ == b.coeffs_;
    }

private:
    static int check_degree(int d)
    {
        if (d < 0) {
            throw std::invalid_argument("negative u-degree cap");
        }
        return d;
    }
    void check_shape(const UPoly &o) const
    {
        if (o.coeffs_.size() != coeffs_.size() || o.weight_cap_ != weight_cap_) {
            throw truncation_mismatch("UPoly caps differ");
        }
    }

    std::vector<GradedSPoly> coeffs_;
    int weight_cap_;
};

inline UPoly upoly_mul(const UPoly &a, const UPoly &b)
{
    if (a.degree_cap() != b.degree_cap() || a.weight_cap() != b.weight_cap()) {
        throw truncation_mismatch("upoly_mul: caps differ");
    }
    UPoly out(a.degree_cap(), a.weight_cap());
    for (int i = 0; i <= a.degree_cap(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= a.degree_cap(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// exp(E) for E without a u^0 part, via d F_d = sum_{j=1..d} j E_j F_{d-j}.
inline UPoly exp_truncated(const UPoly &e)
{
    if (!e[0].is_zero()) {
        throw std::domain_error("exp_truncated: nonzero constant term");
    }
    const int cap = e.degree_cap();
    UPoly f(cap, e.weight_cap());
    f[0] = GradedSPoly::one(e.weight_cap());
    for (int d = 1; d <= cap; ++d) {
        GradedSPoly acc(e.weight_cap());
        for (int j = 1; j <= d; ++j) {
            if (e[j].is_zero() || f[d - j].is_zero()) {
                continue;
            }
            acc += e[j] * f[d - j] * Rational(j);
        }
        acc *= make_rational(1, d);
        f[d] = std::move(acc);
    }
    return f;
}

// Truncated series in z with GradedSPoly coefficients; coefficients z^0..z^n_max.
class ZSeries
{
public:
    ZSeries(int n_max, int weight_cap)
        : coeffs_(static_cast<std::size_t>(check_order(n_max)) + 1, GradedSPoly(weight_cap)), weight_cap_(weight_cap)
    {
    }

    int n_max() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    int weight_cap() const noexcept
    {
        return weight_cap_;
    }
    const GradedSPoly &operator[](int n) const
    {
        return coeffs_.at(static_cast<std::size_t>(n));
    }
    GradedSPoly &operator[](int n)
    {
        return coeffs_.at(static_cast<std::size_t>(n));
    }

    ZSeries &operator+=(const ZSeries &o)
    {
        check_shape(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] += o.coeffs_[n];
        }
        return *this;
    }
    ZSeries &operator-=(const ZSeries &o)
    {
        check_shape(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] -= o.coeffs_[n];
        }
        return *this;
    }
    ZSeries &operator*=(const Rational &c)
    {
        for (auto &p : coeffs_) {
            p *= c;
        }
        return *this;
    }
    friend ZSeries operator+(ZSeries a, const ZSeries &b)
    {
        a += b;
        return a;
    }
    friend ZSeries operator-(ZSeries a, const ZSeries &b)
    {
        a -= b;
        return a;
    }
    friend ZSeries operator*(ZSeries a, const Rational &c)
    {
        a *= c;
        return a;
    }

    friend bool operator==(const ZSeries &a, const ZSeries &b)
    {
        return a.weight_cap_ == b.weight_cap_ && a.coeffs_ == b.coeffs_;
    }

private:
    static int check_order(int n)
    {
        if (n < 0) {
            throw std::invalid_argument("negative z-order");
        }
        return n;
    }
    void check_shape(const ZSeries &o) const
    {
        if (o.coeffs_.size() != coeffs_.size() || o.weight_cap_ != weight_cap_) {
            throw truncation_mismatch("ZSeries truncations differ");
        }
    }

    std::vector<GradedSPoly> coeffs_;
    int weight_cap_;
};

inline ZSeries zseries_mul(const ZSeries &a, const ZSeries &b)
{
    if (a.n_max() != b.n_max() || a.weight_cap() != b.weight_cap()) {
        throw truncation_mismatch("zseries_mul: truncations differ");
    }
    ZSeries out(a.n_max(), a.weight_cap());
    for (int i = 0; i <= a.n_max(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= a.n_max(); ++j) {
            if (!b[j].is_zero()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

// ln H for H with constant coefficient exactly 1. Uses the coefficient
// recurrence n L_n = n h_n - sum_{k=1}^{n-1} k L_k h_{n-k}, which is the
// termwise expansion of sum_m (-1)^{m+1} (H-1)^m / m.
inline ZSeries zseries_log(const ZSeries &h)
{
    if (h[0] != GradedSPoly::one(h.weight_cap())) {
        throw std::domain_error("zseries_log: constant coefficient is not 1");
    }
    ZSeries log(h.n_max(), h.weight_cap());
    for (int n = 1; n <= h.n_max(); ++n) {
        GradedSPoly acc = h[n] * Rational(n);
        for (int k = 1; k < n; ++k) {
            if (log[k].is_zero() || h[n - k].is_zero()) {
                continue;
            }
            acc -= log[k] * h[n - k] * Rational(k);
        }
        acc *= make_rational(1, n);
        log[n] = std::move(acc);
    }
    return log;
}

// exp L for L without constant term: n E_n = sum_{k=1}^{n} k L_k E_{n-k}.
inline ZSeries zseries_exp(const ZSeries &l)
{
    if (!l[0].is_zero()) {
        throw std::domain_error("zseries_exp: nonzero constant term");
    }
    ZSeries e(l.n_max(), l.weight_cap());
    e[0] = GradedSPoly::one(l.weight_cap());
    for (int n = 1; n <= l.n_max(); ++n) {
        GradedSPoly acc(l.weight_cap());
        for (int k = 1; k <= n; ++k) {
            if (l[k].is_zero() || e[n - k].is_zero()) {
                continue;
            }
            acc += l[k] * e[n - k] * Rational(k);
        }
        acc *= make_rational(1, n);
        e[n] = std::move(acc);
    }
    return e;
}

// (z d/dz)^2: the z^n coefficient is multiplied by n^2.
inline ZSeries zseries_euler_sq(const ZSeries &h)
{
    ZSeries out = h;
    for (int n = 0; n <= h.n_max(); ++n) {
        out[n] *= Rational(static_cast<long>(n) * n);
    }
    return out;
}

} // namespace kummer

#endif
