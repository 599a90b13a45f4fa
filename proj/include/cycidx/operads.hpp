#pragma once

#include <algorithm>

#include "error.hpp"
#include "laurent.hpp"
#include "series.hpp"

namespace cycidx {

/// Moebius function by trial factorization.
inline int mobius(int n)
{
    if (n < 1) {
        throw Error(ErrorKind::InvalidParams, "mobius needs n >= 1");
    }
    int value = 1;
    int rest = n;
    for (int p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            rest /= p;
            if (rest % p == 0) {
                value = 0;
                break;
            }
            value = -value;
        }
    }
    if (value != 0 && rest > 1) {
        value = -value;
    }
#ifdef CYCIDX_CORRUPT_MOBIUS_AT
    // Negative-control builds flip one value so the checks have something to catch.
    if (n == CYCIDX_CORRUPT_MOBIUS_AT) {
        value = value == 0 ? 1 : -value;
    }
#endif
    return value;
}

/// sum_{i=1}^{trunc} coeff_i * p_i / i.
template <typename CoeffFn>
CycleIndexSeries power_sum_series(int trunc, CoeffFn &&coeff_of_index)
{
    CycleIndexSeries r(trunc);
    for (int i = 1; i <= trunc; ++i) {
        r.add_term(PMonomial::p(i), make_rational(1, i) * coeff_of_index(i));
    }
    return r;
}

/// Multiplies each monomial of cardinality n by u^n.
inline CycleIndexSeries weight_by_cardinality_in_u(const CycleIndexSeries &a)
{
    return a.map_coefficients([](const PMonomial &m, const LaurentCoeff &c) {
        return c * LaurentCoeff::monomial(1, 0, m.cardinality());
    });
}

/// exp(sum p_i / i): the trivial representation in every arity.
inline CycleIndexSeries z_com(int trunc)
{
    return exp_series(power_sum_series(trunc, [](int) { return LaurentCoeff(1); }));
}

namespace detail {

inline CycleIndexSeries z_lie_impl(int trunc, bool refined)
{
    CycleIndexSeries r(trunc);
    for (int i = 1; i <= trunc; ++i) {
        const int mu = mobius(i);
        if (mu == 0) {
            continue;
        }
        // ln(1 - p_i), or ln(1 - u^i p_i) when refined.
        const LaurentCoeff lead = refined ? LaurentCoeff::monomial(1, 0, i) : LaurentCoeff(1);
        const auto base = CycleIndexSeries::one(trunc) - CycleIndexSeries::monomial(trunc, PMonomial::p(i), lead);
        LaurentCoeff scale = LaurentCoeff(make_rational(-mu, i));
        if (refined) {
            scale = scale * LaurentCoeff::monomial(1, 0, -1);
        }
        r = r + scale * ln_series(base);
    }
    return r;
}

} // namespace detail

/// sum_i (-mu(i)/i) ln(1 - p_i).
inline CycleIndexSeries z_lie(int trunc) { return detail::z_lie_impl(trunc, false); }

/// Lie with u counting brackets: sum_i (-mu(i)/u) ln(1 - u^i p_i) / i.
inline CycleIndexSeries z_lie_refined(int trunc) { return detail::z_lie_impl(trunc, true); }

/// Hook sequence: (-q)^(k-2) (1 - [exp(-sum p_i/i)]_{<=k-1} exp(sum p_i/i)).
///
/// Vanishes below cardinality k; in arity n >= k it is q^(k-2) times the
/// cycle index of the hook V_(n-k+1, 1^(k-1)).
inline CycleIndexSeries z_hook(int k, int trunc)
{
    if (k < 2) {
        throw Error(ErrorKind::InvalidK, "hook sequence needs k >= 2, got " + std::to_string(k));
    }
    if (trunc < 0) {
        throw Error(ErrorKind::InvalidParams, "negative truncation");
    }
    const int work = std::max(trunc, k - 1);
    const auto sum = power_sum_series(work, [](int) { return LaurentCoeff(1); });
    const auto lower = as_polynomial(truncate(exp_series(-sum), k - 1), trunc);
    const auto upper = truncate(exp_series(sum), trunc);
    const LaurentCoeff prefactor = LaurentCoeff::neg_q_pow(k - 2);
    return prefactor * (CycleIndexSeries::one(trunc) - lower * upper);
}

/// (w / u^k) z_hook(k) with p_i -> u^i p_i; arity n carries w u^(n-k).
inline CycleIndexSeries z_hook_refined(int k, int trunc)
{
    return LaurentCoeff::monomial(1, 0, -k, 1) * weight_by_cardinality_in_u(z_hook(k, trunc));
}

/// Operadic {d-1} suspension: q^(1-d) a(p_i -> (-1)^((i-1)(d-1)) q^(i(d-1)) p_i).
/// The arity-n part is shifted by q^((n-1)(d-1)) and twisted by sign^(d-1).
inline CycleIndexSeries suspend(const CycleIndexSeries &a, int d)
{
    if (d < 1) {
        throw Error(ErrorKind::InvalidParams, "suspension needs d >= 1");
    }
    return a.map_coefficients([d](const PMonomial &m, const LaurentCoeff &c) {
        const int n = m.cardinality();
        return c.shifted((n - 1) * (d - 1), (n - m.length()) * (d - 1));
    });
}

/// p_1, the composition unit.
inline CycleIndexSeries unit_series(int trunc) { return CycleIndexSeries::monomial(trunc, PMonomial::p(1)); }

} // namespace cycidx
