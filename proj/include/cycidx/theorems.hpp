#pragma once

#include <string>
#include <vector>

#include "error.hpp"
#include "laurent.hpp"
#include "operads.hpp"
#include "series.hpp"

namespace cycidx {

/// Parameters of the non-k-equal configuration spaces of points in R^d.
struct ModelParams {
    int d = 2;
    int k = 3;
    int trunc = 8;

    void validate() const
    {
        if (d < 1 || k < 2 || trunc < 0) {
            throw Error(ErrorKind::InvalidParams, "need d >= 1, k >= 2, trunc >= 0 (got d=" + std::to_string(d)
                                                      + ", k=" + std::to_string(k)
                                                      + ", trunc=" + std::to_string(trunc) + ")");
        }
    }

    /// For k = 2 or d = 1 the bracket gradings come from a filtration, so
    /// the refined series describes the associated graded module only.
    bool graded_factor_only() const noexcept { return k == 2 || d == 1; }

    std::string refinement_note() const
    {
        if (graded_factor_only()) {
            return "k = 2 or d = 1: the long/short bracket gradings come from a filtration, not a splitting; "
                   "the refined series is the cycle index of the associated graded factor";
        }
        return "long/short bracket gradings split the homology";
    }
};

/// Coefficients of m * E_m(y) = sum_{i | m} mu(i) y^(m/i), indexed by the
/// power of y; E_m itself is this divided by m.
inline std::vector<Rational> necklace(int m)
{
    if (m < 1) {
        throw Error(ErrorKind::InvalidParams, "necklace needs m >= 1");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
        if (m % i == 0) {
            coeffs[m / i] += make_rational(mobius(i), m);
        }
    }
    return coeffs;
}

/// (-1)^d E_m(y) at y = (-q)^(1-d), or y = (-q)^(1-d) / u when refined.
inline LaurentCoeff necklace_at(int m, int d, bool refined = false)
{
    const auto coeffs = necklace(m);
    LaurentCoeff r;
    for (int r_pow = 1; r_pow <= m; ++r_pow) {
        if (coeffs[r_pow] == 0) {
            continue;
        }
        const int qe = r_pow * (1 - d);
        r += LaurentCoeff::monomial(sign_of_power(qe) * sign_of_power(d) * coeffs[r_pow], qe,
                                    refined ? -r_pow : 0);
    }
    return r;
}

namespace detail {

/// The m-th factor base of the closed product:
///   1 - lead * (-q)^(m(k-2)) * (1 - [exp(-S)]_{<= m(k-1)} exp(S)),
/// with S = sum_j (-1)^(d-1) (-q)^(mj(d-1)) p_{mj} / j (times u^(mj) when
/// refined) and lead = w^m / u^(m(k-1)) when refined, 1 otherwise.
inline CycleIndexSeries closed_factor_base(const ModelParams &p, int m, bool refined)
{
    const int trunc = p.trunc;
    CycleIndexSeries s(trunc);
    for (int j = 1; m * j <= trunc; ++j) {
        const int qe = m * j * (p.d - 1);
        auto c = LaurentCoeff::monomial(make_rational(sign_of_power(p.d - 1) * sign_of_power(qe), j), qe,
                                        refined ? m * j : 0);
        s.add_term(PMonomial::p(m * j), c);
    }
    const int cut = m * (p.k - 1);
    auto lower = exp_series(-s);
    if (cut < trunc) {
        lower = as_polynomial(truncate(lower, cut), trunc);
    }
    const auto one = CycleIndexSeries::one(trunc);
    LaurentCoeff lead = LaurentCoeff::neg_q_pow(m * (p.k - 2));
    if (refined) {
        lead = lead * LaurentCoeff::monomial(1, 0, -m * (p.k - 1), m);
    }
    return one - lead * (one - lower * exp_series(s));
}

inline CycleIndexSeries closed_form(const ModelParams &p, bool refined)
{
    p.validate();
    auto result = z_com(p.trunc);
    for (int m = 1; m <= p.trunc; ++m) {
        result = result * pow_by_coeff(closed_factor_base(p, m, refined), necklace_at(m, p.d, refined));
    }
    return result;
}

} // namespace detail

/// Closed product formula for the cycle index sum of H_* of the
/// non-k-equal configuration spaces.
inline CycleIndexSeries theorem1_closed(const ModelParams &p) { return detail::closed_form(p, false); }

/// Closed product formula with u counting short and w counting long brackets.
inline CycleIndexSeries theorem2_closed(const ModelParams &p) { return detail::closed_form(p, true); }

/// Product formula for the ordinary configuration spaces (k = 2).
inline CycleIndexSeries k2_product(int d, int trunc)
{
    ModelParams{d, 2, trunc}.validate();
    auto result = CycleIndexSeries::one(trunc);
    for (int m = 1; m <= trunc; ++m) {
        const int qe = m * (d - 1);
        const auto base = CycleIndexSeries::one(trunc)
            + CycleIndexSeries::monomial(trunc, PMonomial::p(m),
                                         LaurentCoeff::monomial(sign_of_power(d) * sign_of_power(qe), qe));
        result = result * pow_by_coeff(base, necklace_at(m, d));
    }
    return result;
}

/// Com o (1 + (Lie o Hook){d-1}), assembled step by step from the
/// operad series.
inline CycleIndexSeries pipeline(const ModelParams &p, bool refined = false)
{
    p.validate();
    const auto lie = refined ? z_lie_refined(p.trunc) : z_lie(p.trunc);
    const auto hook = refined ? z_hook_refined(p.k, p.trunc) : z_hook(p.k, p.trunc);
    const auto lie_hook = plethysm(lie, hook, refined);
    const auto inner = unit_series(p.trunc) + suspend(lie_hook, p.d);
    return plethysm(z_com(p.trunc), inner, refined);
}

/// Exponential generating function of the Poincare polynomials,
///   e^x (1 - (-q)^(k-2) + (-q)^(k-2) [e^(-q^(d-1) x)]_{<k} e^(q^(d-1) x))^(-q^(1-d)),
/// evaluated with p1 standing in for x.
inline EgfSeries egf_poincare(const ModelParams &p, int xorder)
{
    p.validate();
    if (xorder < 0) {
        throw Error(ErrorKind::InvalidParams, "negative x order");
    }
    const auto x = [&](const LaurentCoeff &c) { return CycleIndexSeries::monomial(xorder, PMonomial::p(1), c); };
    const auto one = CycleIndexSeries::one(xorder);
    const LaurentCoeff scale = LaurentCoeff::monomial(1, p.d - 1);

    CycleIndexSeries partial(xorder);
    for (int j = 0; j < p.k && j <= xorder; ++j) {
        partial.add_term(PMonomial::p(1, j),
                         LaurentCoeff::monomial(make_rational(sign_of_power(j), factorial(j)), j * (p.d - 1)));
    }
    const LaurentCoeff hook_sign = LaurentCoeff::neg_q_pow(p.k - 2);
    const auto base = one - hook_sign * one + hook_sign * (partial * exp_series(x(scale)));
    const auto series = exp_series(x(LaurentCoeff(1))) * pow_by_coeff(base, -LaurentCoeff::monomial(1, 1 - p.d));
    return specialize_egf(series);
}

} // namespace cycidx
