#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "laurent.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace cycidx {

/// Truncated sum of power-sum monomials with Laurent coefficients.
///
/// A series with truncation N carries exact coefficients for every
/// monomial of cardinality <= N and nothing above. Binary operations
/// work at the smaller of the two truncations.
class CycleIndexSeries
{
public:
    using map_type = std::map<PMonomial, LaurentCoeff, MonomialOrder>;

    explicit CycleIndexSeries(int trunc = 0) : m_trunc(trunc)
    {
        if (trunc < 0) {
            throw Error(ErrorKind::InvalidParams, "negative truncation");
        }
    }

    /// Terms above the truncation and zero coefficients are dropped.
    CycleIndexSeries(int trunc, const map_type &terms) : CycleIndexSeries(trunc)
    {
        for (const auto &[m, c] : terms) {
            add_term(m, c);
        }
    }

    static CycleIndexSeries constant(int trunc, const LaurentCoeff &c)
    {
        CycleIndexSeries r(trunc);
        r.add_term(PMonomial{}, c);
        return r;
    }

    static CycleIndexSeries one(int trunc) { return constant(trunc, LaurentCoeff(1)); }

    static CycleIndexSeries monomial(int trunc, const PMonomial &m, const LaurentCoeff &c = LaurentCoeff(1))
    {
        CycleIndexSeries r(trunc);
        r.add_term(m, c);
        return r;
    }

    int trunc() const noexcept { return m_trunc; }
    const map_type &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }

    LaurentCoeff coeff(const PMonomial &m) const
    {
        auto it = m_terms.find(m);
        return it == m_terms.end() ? LaurentCoeff() : it->second;
    }

    LaurentCoeff constant_term() const { return coeff(PMonomial{}); }

    /// Least cardinality carrying a nonzero coefficient; nullopt for zero.
    std::optional<int> min_cardinality() const
    {
        if (m_terms.empty()) {
            return std::nullopt;
        }
        return m_terms.begin()->first.cardinality();
    }

    /// Accumulates c into the coefficient of m; ignored above the truncation.
    void add_term(const PMonomial &m, const LaurentCoeff &c)
    {
        if (c.is_zero() || m.cardinality() > m_trunc) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    /// Applies f(monomial, coeff) -> coeff to every term.
    template <typename F>
    CycleIndexSeries map_coefficients(F &&f) const
    {
        CycleIndexSeries r(m_trunc);
        for (const auto &[m, c] : m_terms) {
            r.add_term(m, f(m, c));
        }
        return r;
    }

    friend bool operator==(const CycleIndexSeries &a, const CycleIndexSeries &b)
    {
        return a.m_trunc == b.m_trunc && a.m_terms == b.m_terms;
    }

private:
    int m_trunc;
    map_type m_terms;
};

inline CycleIndexSeries operator+(const CycleIndexSeries &a, const CycleIndexSeries &b)
{
    CycleIndexSeries r(std::min(a.trunc(), b.trunc()), a.terms());
    for (const auto &[m, c] : b.terms()) {
        r.add_term(m, c);
    }
    return r;
}

inline CycleIndexSeries operator-(const CycleIndexSeries &a)
{
    return a.map_coefficients([](const PMonomial &, const LaurentCoeff &c) { return -c; });
}

inline CycleIndexSeries operator-(const CycleIndexSeries &a, const CycleIndexSeries &b) { return a + (-b); }

inline CycleIndexSeries operator*(const LaurentCoeff &s, const CycleIndexSeries &a)
{
    return a.map_coefficients([&s](const PMonomial &, const LaurentCoeff &c) { return s * c; });
}

inline CycleIndexSeries operator*(const Rational &s, const CycleIndexSeries &a) { return LaurentCoeff(s) * a; }

inline CycleIndexSeries operator*(const CycleIndexSeries &a, const CycleIndexSeries &b)
{
    const int trunc = std::min(a.trunc(), b.trunc());
    CycleIndexSeries r(trunc);
    for (const auto &[ma, ca] : a.terms()) {
        const int room = trunc - ma.cardinality();
        if (room < 0) {
            break;
        }
        // Terms are ordered by cardinality, so stop at the first that overflows.
        for (const auto &[mb, cb] : b.terms()) {
            if (mb.cardinality() > room) {
                break;
            }
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

inline CycleIndexSeries add(const CycleIndexSeries &a, const CycleIndexSeries &b) { return a + b; }
inline CycleIndexSeries mul(const CycleIndexSeries &a, const CycleIndexSeries &b) { return a * b; }

inline CycleIndexSeries exp_series(const CycleIndexSeries &a)
{
    if (!a.constant_term().is_zero()) {
        throw Error(ErrorKind::NonzeroConstantTerm, "exp needs a series without constant term");
    }
    CycleIndexSeries result = CycleIndexSeries::one(a.trunc());
    const auto mincard = a.min_cardinality();
    if (!mincard) {
        return result;
    }
    CycleIndexSeries term = result;
    const int terms = a.trunc() / *mincard;
    for (int j = 1; j <= terms; ++j) {
        term = make_rational(1, j) * (term * a);
        result = result + term;
    }
    return result;
}

inline CycleIndexSeries ln_series(const CycleIndexSeries &a)
{
    if (!a.constant_term().is_one()) {
        throw Error(ErrorKind::ConstantTermNotOne, "ln needs constant term exactly 1");
    }
    const CycleIndexSeries x = a - CycleIndexSeries::one(a.trunc());
    CycleIndexSeries result(a.trunc());
    const auto mincard = x.min_cardinality();
    if (!mincard) {
        return result;
    }
    CycleIndexSeries power = x;
    const int terms = a.trunc() / *mincard;
    for (int j = 1; j <= terms; ++j) {
        if (j > 1) {
            power = power * x;
        }
        result = result + make_rational(j % 2 == 1 ? 1 : -1, j) * power;
    }
    return result;
}

/// base^expo = exp(expo * ln(base)) for a Laurent exponent.
inline CycleIndexSeries pow_by_coeff(const CycleIndexSeries &base, const LaurentCoeff &expo)
{
    return exp_series(expo * ln_series(base));
}

inline CycleIndexSeries truncate(const CycleIndexSeries &a, int n)
{
    if (n > a.trunc()) {
        throw Error(ErrorKind::PrecisionExceeded,
                    "cannot truncate at " + std::to_string(n) + " a series known to " + std::to_string(a.trunc()));
    }
    return CycleIndexSeries(n, a.terms());
}

/// Re-labels the terms of a as an exact polynomial at truncation n.
/// Only valid when a's terms are the complete polynomial, e.g. the output
/// of truncate().
inline CycleIndexSeries as_polynomial(const CycleIndexSeries &a, int n) { return CycleIndexSeries(n, a.terms()); }

/// The cardinality-n homogeneous part, as a series with truncation n.
inline CycleIndexSeries extract_arity(const CycleIndexSeries &a, int n)
{
    if (n > a.trunc() || n < 0) {
        throw Error(ErrorKind::PrecisionExceeded,
                    "arity " + std::to_string(n) + " beyond truncation " + std::to_string(a.trunc()));
    }
    CycleIndexSeries r(n);
    for (const auto &[m, c] : a.terms()) {
        if (m.cardinality() == n) {
            r.add_term(m, c);
        }
    }
    return r;
}

/// p_i * inner: q -> (-1)^(i-1) q^i, p_j -> p_{ij}, and u -> u^i, w -> w^i
/// when refined. Monomials pushed above trunc are dropped.
inline CycleIndexSeries plethystic_twist(const CycleIndexSeries &inner, int i, bool refined, int trunc)
{
    CycleIndexSeries r(trunc);
    for (const auto &[m, c] : inner.terms()) {
        if (m.cardinality() * i > trunc) {
            break;
        }
        r.add_term(m.dilated(i), c.twisted(i, refined));
    }
    return r;
}

/// Graded plethysm outer * inner: substitutes p_i -> p_i * inner in outer.
/// The coefficients of outer are left untouched.
inline CycleIndexSeries plethysm(const CycleIndexSeries &outer, const CycleIndexSeries &inner, bool refined = false)
{
    if (!inner.constant_term().is_zero()) {
        throw Error(ErrorKind::InnerConstantTerm, "plethysm needs an inner series without constant term");
    }
    const int trunc = std::min(outer.trunc(), inner.trunc());
    CycleIndexSeries result(trunc);
    const auto inner_min = inner.min_cardinality();
    if (!inner_min) {
        result.add_term(PMonomial{}, outer.constant_term());
        return result;
    }
    const int c = *inner_min;

    // powers[i][e] = (p_i * inner)^e, filled on demand.
    std::vector<std::vector<CycleIndexSeries>> powers(trunc / c + 1);
    auto power = [&](int i, int e) -> const CycleIndexSeries & {
        auto &row = powers[i];
        if (row.empty()) {
            row.push_back(CycleIndexSeries::one(trunc));
            row.push_back(plethystic_twist(inner, i, refined, trunc));
        }
        while (static_cast<int>(row.size()) <= e) {
            row.push_back(row.back() * row[1]);
        }
        return row[e];
    };

    for (const auto &[m, coeff] : outer.terms()) {
        if (m.cardinality() * c > trunc) {
            break;
        }
        CycleIndexSeries image = CycleIndexSeries::one(trunc);
        const auto &exps = m.exponents();
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > 0) {
                image = image * power(static_cast<int>(i + 1), exps[i]);
            }
        }
        for (const auto &[im, ic] : image.terms()) {
            result.add_term(im, coeff * ic);
        }
    }
    return result;
}

/// Partially or fully evaluates the grading variables in every coefficient.
inline CycleIndexSeries substitute_gradings(const CycleIndexSeries &a, const std::optional<Rational> &q0,
                                            const std::optional<Rational> &u0, const std::optional<Rational> &w0)
{
    return a.map_coefficients(
        [&](const PMonomial &, const LaurentCoeff &c) { return c.substituted(q0, u0, w0); });
}

/// Sets u = w = 1 everywhere.
inline CycleIndexSeries erase_refinement(const CycleIndexSeries &a)
{
    return substitute_gradings(a, std::nullopt, Rational(1), Rational(1));
}

/// Univariate series in x with Laurent coefficients; coeffs[n] is the
/// coefficient of x^n, known for n <= trunc.
struct EgfSeries {
    int trunc = 0;
    std::vector<LaurentCoeff> coeffs;

    explicit EgfSeries(int t = 0) : trunc(t), coeffs(static_cast<std::size_t>(t) + 1) {}

    const LaurentCoeff &operator[](int n) const { return coeffs.at(n); }
    LaurentCoeff &operator[](int n) { return coeffs.at(n); }

    friend bool operator==(const EgfSeries &, const EgfSeries &) = default;

    friend EgfSeries operator*(const EgfSeries &a, const EgfSeries &b)
    {
        EgfSeries r(std::min(a.trunc, b.trunc));
        for (int i = 0; i <= r.trunc; ++i) {
            for (int j = 0; i + j <= r.trunc; ++j) {
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }
};

/// p1 -> x, p_i -> 0 for i >= 2.
inline EgfSeries specialize_egf(const CycleIndexSeries &a)
{
    EgfSeries r(a.trunc());
    for (const auto &[m, c] : a.terms()) {
        if (m.exponents().size() <= 1) {
            r[m.cardinality()] += c;
        }
    }
    return r;
}

inline std::string to_string(const CycleIndexSeries &a)
{
    std::string s = "[trunc " + std::to_string(a.trunc()) + "]";
    for (const auto &[m, c] : a.terms()) {
        s += "\n  " + m.to_string() + " : " + to_string(c);
    }
    return s;
}

inline std::ostream &operator<<(std::ostream &os, const CycleIndexSeries &a) { return os << to_string(a); }

inline std::ostream &operator<<(std::ostream &os, const EgfSeries &a)
{
    os << "[egf trunc " << a.trunc << "]";
    for (int n = 0; n <= a.trunc; ++n) {
        os << "\n  x^" << n << " : " << a[n];
    }
    return os;
}

} // namespace cycidx
