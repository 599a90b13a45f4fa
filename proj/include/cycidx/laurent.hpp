#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "error.hpp"
#include "rational.hpp"

namespace cycidx {

/// Exponents of (q, u, w): homological degree, short brackets, long brackets.
using Exponents = std::array<int, 3>;

inline constexpr int sign_of_power(long long e) noexcept { return (e % 2 == 0) ? 1 : -1; }

/// Exact Laurent polynomial in q, u, w with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
class LaurentCoeff
{
public:
    using map_type = std::map<Exponents, Rational>;

    LaurentCoeff() = default;
    LaurentCoeff(const Rational &c) { add_term({0, 0, 0}, c); }
    LaurentCoeff(long c) : LaurentCoeff(Rational(c)) {}

    static LaurentCoeff monomial(const Rational &c, int q, int u = 0, int w = 0)
    {
        LaurentCoeff r;
        r.add_term({q, u, w}, c);
        return r;
    }

    /// (-q)^a for any integer a.
    static LaurentCoeff neg_q_pow(int a) { return monomial(sign_of_power(a), a); }

    const map_type &terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }
    bool is_one() const
    {
        return m_terms.size() == 1 && m_terms.begin()->first == Exponents{0, 0, 0}
            && m_terms.begin()->second == 1;
    }

    Rational coeff(const Exponents &e) const
    {
        auto it = m_terms.find(e);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    void add_term(const Exponents &e, const Rational &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    LaurentCoeff &operator+=(const LaurentCoeff &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, c);
        }
        return *this;
    }

    LaurentCoeff &operator-=(const LaurentCoeff &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, -c);
        }
        return *this;
    }

    LaurentCoeff operator-() const
    {
        LaurentCoeff r = *this;
        for (auto &[e, c] : r.m_terms) {
            c = -c;
        }
        return r;
    }

    LaurentCoeff &operator*=(const Rational &s)
    {
        if (s == 0) {
            m_terms.clear();
            return *this;
        }
        for (auto &[e, c] : m_terms) {
            c *= s;
        }
        return *this;
    }

    friend LaurentCoeff operator+(LaurentCoeff a, const LaurentCoeff &b) { return a += b; }
    friend LaurentCoeff operator-(LaurentCoeff a, const LaurentCoeff &b) { return a -= b; }
    friend LaurentCoeff operator*(LaurentCoeff a, const Rational &s) { return a *= s; }
    friend LaurentCoeff operator*(const Rational &s, LaurentCoeff a) { return a *= s; }

    friend LaurentCoeff operator*(const LaurentCoeff &a, const LaurentCoeff &b)
    {
        LaurentCoeff r;
        Rational prod;
        for (const auto &[ea, ca] : a.m_terms) {
            for (const auto &[eb, cb] : b.m_terms) {
                prod = ca * cb;
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, prod);
            }
        }
        return r;
    }

    LaurentCoeff &operator*=(const LaurentCoeff &o) { return *this = *this * o; }

    friend bool operator==(const LaurentCoeff &a, const LaurentCoeff &b) { return a.m_terms == b.m_terms; }

    /// Plethystic twist by p_i: q -> (-1)^(i-1) q^i and, when refined,
    /// u -> u^i, w -> w^i.
    LaurentCoeff twisted(int i, bool refined) const
    {
        LaurentCoeff r;
        for (const auto &[e, c] : m_terms) {
            const Exponents te{e[0] * i, refined ? e[1] * i : e[1], refined ? e[2] * i : e[2]};
            r.m_terms.emplace(te, sign_of_power(static_cast<long long>(i - 1) * e[0]) == 1 ? c : Rational(-c));
        }
        return r;
    }

    /// Multiplies every term by (-1)^sign_parity * q^q_shift.
    LaurentCoeff shifted(int q_shift, int sign_parity) const
    {
        LaurentCoeff r;
        for (const auto &[e, c] : m_terms) {
            r.m_terms.emplace(Exponents{e[0] + q_shift, e[1], e[2]}, sign_parity % 2 == 0 ? c : Rational(-c));
        }
        return r;
    }

    /// Substitutes the given variables by rational values; the remaining
    /// variables stay symbolic.
    LaurentCoeff substituted(const std::optional<Rational> &q0, const std::optional<Rational> &u0,
                             const std::optional<Rational> &w0) const
    {
        const std::array<const std::optional<Rational> *, 3> vals{&q0, &u0, &w0};
        for (const auto *v : vals) {
            if (*v && **v == 0) {
                throw Error(ErrorKind::ZeroEvaluationPoint, "evaluation point must be nonzero");
            }
        }
        LaurentCoeff r;
        for (const auto &[e, c] : m_terms) {
            Exponents kept = e;
            Rational value = c;
            for (std::size_t v = 0; v < 3; ++v) {
                if (*vals[v]) {
                    value *= rational_pow(**vals[v], e[v]);
                    kept[v] = 0;
                }
            }
            r.add_term(kept, value);
        }
        return r;
    }

    /// Sets u = w = 1.
    LaurentCoeff erase_refinement() const { return substituted(std::nullopt, Rational(1), Rational(1)); }

    std::pair<int, int> q_degree_range() const
    {
        int lo = 0, hi = 0;
        bool first = true;
        for (const auto &[e, c] : m_terms) {
            lo = first ? e[0] : std::min(lo, e[0]);
            hi = first ? e[0] : std::max(hi, e[0]);
            first = false;
        }
        return {lo, hi};
    }

    static Rational rational_pow(const Rational &base, int e)
    {
        Rational r = 1;
        const Rational b = e < 0 ? Rational(1 / base) : base;
        for (int i = 0; i < std::abs(e); ++i) {
            r *= b;
        }
        return r;
    }

private:
    map_type m_terms;
};

/// Terms in exponent order, each as (c)*q^a*u^b*w^c with unit exponents
/// written bare and zero exponents omitted.
inline std::string to_string(const LaurentCoeff &c)
{
    if (c.is_zero()) {
        return "0";
    }
    static constexpr char names[3] = {'q', 'u', 'w'};
    std::string s;
    for (const auto &[e, v] : c.terms()) {
        if (!s.empty()) {
            s += " + ";
        }
        s += "(" + to_string(v) + ")";
        for (std::size_t i = 0; i < 3; ++i) {
            if (e[i] == 0) {
                continue;
            }
            s += '*';
            s += names[i];
            if (e[i] != 1) {
                s += "^" + std::to_string(e[i]);
            }
        }
    }
    return s;
}

inline std::ostream &operator<<(std::ostream &os, const LaurentCoeff &c) { return os << to_string(c); }

inline Rational evaluate_coeff(const LaurentCoeff &c, const Rational &q0, const Rational &u0, const Rational &w0)
{
    const auto r = c.substituted(q0, u0, w0);
    return r.coeff({0, 0, 0});
}

} // namespace cycidx
