#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "laurent.hpp"
#include "monomial.hpp"
#include "series.hpp"

// Brute-force representation theory of the symmetric groups. Nothing in
// here calls into the series arithmetic or the operad constructors; the
// only shared pieces are the value types used to report results.

namespace cycidx::oracle {

/// Partition of n, parts weakly decreasing. Used both as a conjugacy
/// class (cycle lengths) and as an irreducible label (Young shape).
struct CycleType {
    std::vector<int> parts;

    CycleType() = default;
    explicit CycleType(std::vector<int> p) : parts(std::move(p))
    {
        for (int x : parts) {
            if (x <= 0) {
                throw Error(ErrorKind::InvalidParams, "partition parts must be positive");
            }
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
    }
    CycleType(std::initializer_list<int> p) : CycleType(std::vector<int>(p)) {}

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    PMonomial monomial() const { return PMonomial::from_parts(parts); }
    Integer z() const { return monomial().z(); }
    Integer class_size() const { return factorial(size()) / z(); }
    int sign() const { return sign_of_power(size() - length()); }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            s += (i ? "," : "") + std::to_string(parts[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const CycleType &, const CycleType &) = default;
};

/// Hook shape (n-k+1, 1^(k-1)).
inline CycleType hook_shape(int n, int k)
{
    std::vector<int> p{n - k + 1};
    p.insert(p.end(), k - 1, 1);
    return CycleType(p);
}

/// All partitions of n in reverse lexicographic order.
inline std::vector<CycleType> partitions(int n)
{
    if (n < 0 || n > 25) {
        throw Error(ErrorKind::TooLarge, "partitions supports 0 <= n <= 25, got " + std::to_string(n));
    }
    std::vector<CycleType> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            CycleType c;
            c.parts = current;
            out.push_back(std::move(c));
            return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(rest - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Graded trace function of a Sigma_n-module, one Laurent value per class.
/// Virtual characters are allowed.
struct GradedCharacter {
    int n = 0;
    std::map<CycleType, LaurentCoeff, std::greater<>> values;

    const LaurentCoeff &at(const CycleType &c) const
    {
        auto it = values.find(c);
        if (it == values.end()) {
            throw Error(ErrorKind::ShapeMismatch, "no class " + c.to_string() + " in arity " + std::to_string(n));
        }
        return it->second;
    }

    /// Graded dimension, the value at the identity.
    const LaurentCoeff &dimension() const { return at(CycleType(std::vector<int>(n, 1))); }

    friend bool operator==(const GradedCharacter &, const GradedCharacter &) = default;
};

template <typename F>
GradedCharacter tabulate(int n, F &&value_at)
{
    GradedCharacter chi;
    chi.n = n;
    for (const auto &c : partitions(n)) {
        chi.values.emplace(c, LaurentCoeff(value_at(c)));
    }
    return chi;
}

namespace detail {

using BetaSet = std::vector<int>; // strictly decreasing
using MnCache = std::map<std::pair<BetaSet, std::vector<int>>, std::int64_t>;

inline std::int64_t mn_recurse(const BetaSet &beta, const std::vector<int> &rest, MnCache &cache)
{
    if (rest.empty()) {
        return 1;
    }
    const auto key = std::make_pair(beta, rest);
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    const int r = rest.front();
    const std::vector<int> tail(rest.begin() + 1, rest.end());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        // Removing a rim hook of length r slides one bead down by r; the
        // leg length is the number of beads jumped over.
        int jumped = 0;
        for (int b : beta) {
            jumped += (b > target && b < beta[i]) ? 1 : 0;
        }
        BetaSet next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<>());
        total += sign_of_power(jumped) * mn_recurse(next, tail, cache);
    }
    cache.emplace(key, total);
    return total;
}

} // namespace detail

/// Irreducible character value chi_lambda(mu) by the Murnaghan-Nakayama rule.
inline std::int64_t mn_char(const CycleType &lambda, const CycleType &mu)
{
    if (lambda.size() != mu.size()) {
        throw Error(ErrorKind::ShapeMismatch,
                    "shape " + lambda.to_string() + " and class " + mu.to_string() + " have different sizes");
    }
    const int len = lambda.length();
    detail::BetaSet beta(len);
    for (int i = 0; i < len; ++i) {
        beta[i] = lambda.parts[i] + (len - 1 - i);
    }
    detail::MnCache cache;
    return detail::mn_recurse(beta, mu.parts, cache);
}

inline GradedCharacter irreducible_char(const CycleType &lambda)
{
    return tabulate(lambda.size(), [&](const CycleType &mu) { return mn_char(lambda, mu); });
}

inline GradedCharacter trivial_char(int n)
{
    return tabulate(n, [](const CycleType &) { return 1L; });
}

inline GradedCharacter sign_char(int n)
{
    return tabulate(n, [](const CycleType &c) { return static_cast<long>(c.sign()); });
}

/// n! at the identity, zero elsewhere.
inline GradedCharacter regular_char(int n)
{
    return tabulate(n, [n](const CycleType &c) {
        return c.length() == n ? Rational(factorial(n)) : Rational(0);
    });
}

/// Graded traces on the exterior algebra of the permutation module W_n:
/// coefficients of t^j in prod over cycles of length l of (1 - (-t)^l).
inline std::vector<std::int64_t> ext_power_chars(int n, const CycleType &sigma)
{
    if (sigma.size() != n) {
        throw Error(ErrorKind::ShapeMismatch, "class " + sigma.to_string() + " is not in Sigma_" + std::to_string(n));
    }
    std::vector<std::int64_t> poly{1};
    for (int l : sigma.parts) {
        std::vector<std::int64_t> next(poly.size() + l, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j] += poly[j];
            next[j + l] -= sign_of_power(l) * poly[j];
        }
        poly = std::move(next);
    }
    return poly;
}

/// Character of Ind_{Sigma_j x Sigma_{n-j}} (sign (x) trivial) at sigma:
/// sum over ways of handing a j-point subset of cycles to the first
/// factor, weighted by the sign of that sub-permutation.
inline std::int64_t induced_hook_char(int n, int j, const CycleType &sigma)
{
    if (j < 0 || j > n) {
        throw Error(ErrorKind::InvalidRange, "need 0 <= j <= n");
    }
    if (sigma.size() != n) {
        throw Error(ErrorKind::ShapeMismatch, "class " + sigma.to_string() + " is not in Sigma_" + std::to_string(n));
    }
    // (cycle length, multiplicity)
    std::vector<std::pair<int, int>> groups;
    for (int l : sigma.parts) {
        if (!groups.empty() && groups.back().first == l) {
            ++groups.back().second;
        } else {
            groups.emplace_back(l, 1);
        }
    }
    std::int64_t total = 0;
    std::function<void(std::size_t, int, int, std::int64_t)> rec = [&](std::size_t g, int taken, int parity,
                                                                        std::int64_t ways) {
        if (taken > j) {
            return;
        }
        if (g == groups.size()) {
            if (taken == j) {
                total += sign_of_power(parity) * ways;
            }
            return;
        }
        const auto [len, mult] = groups[g];
        for (int a = 0; a <= mult; ++a) {
            rec(g + 1, taken + a * len, parity + a * (len - 1), ways * binomial(mult, a).get_si());
        }
    };
    rec(0, 0, 0, 1);
    return total;
}

/// Hook character as the alternating sum of exterior powers of W_n.
inline GradedCharacter hook_char_alternating(int n, int k)
{
    if (!(n >= k && k >= 1)) {
        throw Error(ErrorKind::InvalidRange, "need n >= k >= 1");
    }
    return tabulate(n, [&](const CycleType &sigma) {
        const auto ext = ext_power_chars(n, sigma);
        long v = 0;
        for (int i = 0; i <= k - 1; ++i) {
            v += sign_of_power(i) * ext[k - 1 - i];
        }
        return v;
    });
}

/// Hook character as (-1)^(k-1) sum_j (-1)^j Ind(sign_j (x) trivial_{n-j}).
inline GradedCharacter hook_char_induced(int n, int k)
{
    if (!(n >= k && k >= 1)) {
        throw Error(ErrorKind::InvalidRange, "need n >= k >= 1");
    }
    return tabulate(n, [&](const CycleType &sigma) {
        long v = 0;
        for (int j = 0; j <= k - 1; ++j) {
            v += sign_of_power(j) * induced_hook_char(n, j, sigma);
        }
        return sign_of_power(k - 1) * v;
    });
}

/// Lie(n) as the induced character of a faithful character of the cyclic
/// group C_n: nonzero only on classes (d^(n/d)), where it is z/n times the
/// sum of the primitive d-th roots of unity.
inline GradedCharacter lie_char(int n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidRange, "Lie(n) needs n >= 1");
    }
    // Sum of primitive d-th roots of unity: all d-th roots sum to [d == 1].
    std::vector<long> prim(n + 1, 0);
    for (int d = 1; d <= n; ++d) {
        long s = d == 1 ? 1 : 0;
        for (int e = 1; e < d; ++e) {
            if (d % e == 0) {
                s -= prim[e];
            }
        }
        prim[d] = s;
    }
    return tabulate(n, [&](const CycleType &c) {
        const int d = c.parts.front();
        if (c.parts.back() != d) {
            return Rational(0);
        }
        return make_rational(c.z() * prim[d], Integer(n));
    });
}

/// sum_lambda chi(lambda) / z_lambda * p_lambda, homogeneous of cardinality n.
inline CycleIndexSeries cycle_index_from_character(const GradedCharacter &chi)
{
    CycleIndexSeries r(chi.n);
    for (const auto &[c, v] : chi.values) {
        r.add_term(c.monomial(), v * make_rational(Integer(1), c.z()));
    }
    return r;
}

/// chi(lambda) = z_lambda * [p_lambda] of the arity-n part.
inline GradedCharacter character_from_cycle_index(const CycleIndexSeries &a, int n)
{
    if (n < 0 || n > a.trunc()) {
        throw Error(ErrorKind::PrecisionExceeded,
                    "arity " + std::to_string(n) + " beyond truncation " + std::to_string(a.trunc()));
    }
    GradedCharacter chi;
    chi.n = n;
    for (const auto &c : partitions(n)) {
        chi.values.emplace(c, a.coeff(c.monomial()) * Rational(c.z()));
    }
    return chi;
}

inline LaurentCoeff hall_inner(const GradedCharacter &a, const GradedCharacter &b)
{
    if (a.n != b.n) {
        throw Error(ErrorKind::ArityMismatch, "arities " + std::to_string(a.n) + " and " + std::to_string(b.n));
    }
    LaurentCoeff r;
    for (const auto &[c, v] : a.values) {
        r += (v * b.at(c)) * make_rational(Integer(1), c.z());
    }
    return r;
}

/// Multiplicity of each irreducible in each (q, u, w) multidegree.
using Decomposition = std::map<std::pair<CycleType, Exponents>, Integer, std::greater<>>;

/// Irreducible decomposition by Hall inner products against the
/// Murnaghan-Nakayama characters. Non-integral multiplicities always
/// throw; negative ones throw when the input is claimed to be genuine.
inline Decomposition decompose(const GradedCharacter &chi, bool genuine = true)
{
    Decomposition out;
    for (const auto &lambda : partitions(chi.n)) {
        const auto mult = hall_inner(chi, irreducible_char(lambda));
        for (const auto &[e, v] : mult.terms()) {
            if (v.get_den() != 1) {
                throw Error(ErrorKind::NonIntegralMultiplicity,
                            "V" + lambda.to_string() + " has multiplicity " + to_string(v));
            }
            if (genuine && v < 0) {
                throw Error(ErrorKind::NegativeMultiplicity,
                            "V" + lambda.to_string() + " has multiplicity " + to_string(v));
            }
            out.emplace(std::make_pair(lambda, e), v.get_num());
        }
    }
    return out;
}

} // namespace cycidx::oracle
