#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cycidx {

/// A power-sum monomial p_1^e_1 p_2^e_2 ... stored as the dense exponent
/// vector (e_1, e_2, ...) with trailing zeros trimmed.
class PMonomial
{
public:
    PMonomial() = default;

    /// From (index, exponent) pairs; repeated indices accumulate.
    PMonomial(std::initializer_list<std::pair<int, int>> factors)
    {
        for (const auto &[i, e] : factors) {
            multiply_power(i, e);
        }
    }

    static PMonomial from_exponents(std::vector<int> exps)
    {
        PMonomial m;
        m.m_exps = std::move(exps);
        m.trim();
        return m;
    }

    /// p_lambda for a list of parts.
    static PMonomial from_parts(const std::vector<int> &parts)
    {
        PMonomial m;
        for (int part : parts) {
            m.multiply_power(part, 1);
        }
        return m;
    }

    static PMonomial p(int i, int e = 1) { return PMonomial{{i, e}}; }

    const std::vector<int> &exponents() const noexcept { return m_exps; }

    int exponent(int i) const
    {
        return (i >= 1 && static_cast<std::size_t>(i) <= m_exps.size()) ? m_exps[i - 1] : 0;
    }

    bool is_one() const noexcept { return m_exps.empty(); }

    /// Sum of i * e_i.
    int cardinality() const noexcept
    {
        int c = 0;
        for (std::size_t i = 0; i < m_exps.size(); ++i) {
            c += static_cast<int>(i + 1) * m_exps[i];
        }
        return c;
    }

    /// Number of power-sum factors, i.e. the number of cycles.
    int length() const noexcept
    {
        int l = 0;
        for (int e : m_exps) {
            l += e;
        }
        return l;
    }

    /// Parts in weakly decreasing order.
    std::vector<int> parts() const
    {
        std::vector<int> r;
        for (std::size_t i = m_exps.size(); i-- > 0;) {
            r.insert(r.end(), m_exps[i], static_cast<int>(i + 1));
        }
        return r;
    }

    /// z_lambda = prod_j j^e_j e_j!.
    Integer z() const
    {
        Integer r = 1;
        for (std::size_t i = 0; i < m_exps.size(); ++i) {
            Integer jp;
            mpz_ui_pow_ui(jp.get_mpz_t(), i + 1, m_exps[i]);
            r *= jp * factorial(m_exps[i]);
        }
        return r;
    }

    void multiply_power(int i, int e)
    {
        if (e == 0) {
            return;
        }
        if (static_cast<std::size_t>(i) > m_exps.size()) {
            m_exps.resize(i, 0);
        }
        m_exps[i - 1] += e;
        trim();
    }

    friend PMonomial operator*(const PMonomial &a, const PMonomial &b)
    {
        PMonomial r = a.m_exps.size() >= b.m_exps.size() ? a : b;
        const auto &other = a.m_exps.size() >= b.m_exps.size() ? b : a;
        for (std::size_t i = 0; i < other.m_exps.size(); ++i) {
            r.m_exps[i] += other.m_exps[i];
        }
        return r;
    }

    /// p_j -> p_{i*j}.
    PMonomial dilated(int i) const
    {
        PMonomial r;
        if (m_exps.empty()) {
            return r;
        }
        r.m_exps.assign(m_exps.size() * i, 0);
        for (std::size_t j = 0; j < m_exps.size(); ++j) {
            r.m_exps[(j + 1) * i - 1] = m_exps[j];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const PMonomial &, const PMonomial &) = default;

    /// p1^2*p2 style; the empty monomial renders as "1".
    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < m_exps.size(); ++i) {
            if (m_exps[i] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += '*';
            }
            s += "p" + std::to_string(i + 1);
            if (m_exps[i] != 1) {
                s += "^" + std::to_string(m_exps[i]);
            }
        }
        return s.empty() ? "1" : s;
    }

private:
    void trim()
    {
        while (!m_exps.empty() && m_exps.back() == 0) {
            m_exps.pop_back();
        }
    }

    std::vector<int> m_exps;
};

/// Canonical order: by cardinality, then lexicographically by exponent
/// vector with p1 first and larger exponents first (p1^2 before p2).
struct MonomialOrder {
    bool operator()(const PMonomial &a, const PMonomial &b) const
    {
        const int ca = a.cardinality(), cb = b.cardinality();
        if (ca != cb) {
            return ca < cb;
        }
        const auto &ea = a.exponents();
        const auto &eb = b.exponents();
        const std::size_t n = std::max(ea.size(), eb.size());
        for (std::size_t i = 0; i < n; ++i) {
            const int x = i < ea.size() ? ea[i] : 0;
            const int y = i < eb.size() ? eb[i] : 0;
            if (x != y) {
                return x > y;
            }
        }
        return false;
    }
};

} // namespace cycidx
