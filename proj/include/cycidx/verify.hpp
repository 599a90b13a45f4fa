#pragma once

#include <functional>
#include <string>
#include <vector>

#include "operads.hpp"
#include "oracle.hpp"
#include "series.hpp"
#include "theorems.hpp"

namespace cycidx::verify {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail; // first discrepancy, empty on success
};

struct Scope {
    std::vector<int> ds{1, 2, 3, 4};
    std::vector<int> ks{2, 3, 4, 5};
    int trunc = 8;
    int hook_max_n = 8;
    int equivariant_max_n = 7;
};

/// Empty when equal; otherwise names the first differing monomial.
inline std::string first_difference(const CycleIndexSeries &a, const CycleIndexSeries &b)
{
    if (a.trunc() != b.trunc()) {
        return "truncations differ: " + std::to_string(a.trunc()) + " vs " + std::to_string(b.trunc());
    }
    const auto diff = a - b;
    if (diff.is_zero()) {
        return {};
    }
    const auto &[m, c] = *diff.terms().begin();
    return "monomial " + m.to_string() + ": " + to_string(a.coeff(m)) + " vs " + to_string(b.coeff(m));
}

inline std::string first_difference(const EgfSeries &a, const EgfSeries &b)
{
    if (a.trunc != b.trunc) {
        return "orders differ";
    }
    for (int n = 0; n <= a.trunc; ++n) {
        if (!(a[n] == b[n])) {
            return "x^" + std::to_string(n) + ": " + to_string(a[n]) + " vs " + to_string(b[n]);
        }
    }
    return {};
}

inline std::string first_difference(const oracle::GradedCharacter &a, const oracle::GradedCharacter &b)
{
    if (a.n != b.n) {
        return "arities differ";
    }
    for (const auto &[c, v] : a.values) {
        if (!(v == b.at(c))) {
            return "class " + c.to_string() + ": " + to_string(v) + " vs " + to_string(b.at(c));
        }
    }
    return {};
}

inline std::string grid_label(int d, int k) { return "(d=" + std::to_string(d) + ",k=" + std::to_string(k) + ")"; }

namespace detail {

/// Runs body over every grid point, stopping at the first discrepancy.
inline CheckResult over_grid(const std::string &name, const Scope &s,
                             const std::function<std::string(const ModelParams &)> &body)
{
    CheckResult r{name};
    for (int d : s.ds) {
        for (int k : s.ks) {
            const auto diff = body(ModelParams{d, k, s.trunc});
            if (!diff.empty()) {
                r.passed = false;
                r.detail = grid_label(d, k) + " " + diff;
                return r;
            }
        }
    }
    return r;
}

} // namespace detail

inline CheckResult check_closed_vs_pipeline(const Scope &s)
{
    return detail::over_grid("closed form = operadic pipeline", s, [](const ModelParams &p) {
        return first_difference(theorem1_closed(p), pipeline(p));
    });
}

inline CheckResult check_egf(const Scope &s)
{
    return detail::over_grid("EGF specialization = Poincare generating function", s, [](const ModelParams &p) {
        return first_difference(specialize_egf(theorem1_closed(p)), egf_poincare(p, p.trunc));
    });
}

inline CheckResult check_k2(const Scope &s)
{
    CheckResult r{"k = 2 closed form = configuration space product"};
    for (int d : s.ds) {
        const auto diff = first_difference(theorem1_closed({d, 2, s.trunc}), k2_product(d, s.trunc));
        if (!diff.empty()) {
            r.passed = false;
            r.detail = "(d=" + std::to_string(d) + ") " + diff;
            break;
        }
    }
    return r;
}

inline CheckResult check_refinement(const Scope &s)
{
    return detail::over_grid("refined closed form: u=w=1 erasure and refined pipeline", s,
                             [](const ModelParams &p) {
                                 const auto refined = theorem2_closed(p);
                                 auto diff = first_difference(erase_refinement(refined), theorem1_closed(p));
                                 if (!diff.empty()) {
                                     return "erasure " + diff;
                                 }
                                 diff = first_difference(pipeline(p, true), refined);
                                 return diff.empty() ? diff : "pipeline " + diff;
                             });
}

/// Murnaghan-Nakayama, alternating exterior powers and alternating induced
/// characters agree on every hook, and z_hook matches q^(k-2) times the
/// assembled cycle index.
inline CheckResult check_hooks(const Scope &s)
{
    CheckResult r{"hook characters: three routes and z_hook"};
    auto fail = [&r](const std::string &what) {
        r.passed = false;
        r.detail = what;
        return r;
    };
    for (int k = 2; k <= s.hook_max_n; ++k) {
        const auto hook = z_hook(k, s.hook_max_n);
        for (int n = 1; n <= s.hook_max_n; ++n) {
            const auto part = extract_arity(hook, n);
            const std::string at = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ") ";
            if (n < k) {
                if (!part.is_zero()) {
                    return fail(at + "z_hook does not vanish below k");
                }
                continue;
            }
            const auto mn = oracle::irreducible_char(oracle::hook_shape(n, k));
            auto diff = first_difference(mn, oracle::hook_char_alternating(n, k));
            if (diff.empty()) {
                diff = first_difference(mn, oracle::hook_char_induced(n, k));
            }
            if (!diff.empty()) {
                return fail(at + diff);
            }
            diff = first_difference(part, LaurentCoeff::monomial(1, k - 2)
                                              * oracle::cycle_index_from_character(mn));
            if (!diff.empty()) {
                return fail(at + "z_hook " + diff);
            }
        }
    }
    // Exterior powers as induced modules, and the W_n = V_(n-1,1) + trivial split.
    for (int n = 1; n <= s.hook_max_n; ++n) {
        for (const auto &sigma : oracle::partitions(n)) {
            const auto ext = oracle::ext_power_chars(n, sigma);
            for (int j = 0; j <= n; ++j) {
                if (oracle::induced_hook_char(n, j, sigma) != ext[j]) {
                    return fail("induced vs exterior power at n=" + std::to_string(n) + ", j=" + std::to_string(j)
                                + ", class " + sigma.to_string());
                }
                if (j >= 1 && j < n) {
                    const auto lhs = oracle::mn_char(oracle::hook_shape(n, j + 1), sigma)
                        + oracle::mn_char(oracle::hook_shape(n, j), sigma);
                    if (lhs != ext[j]) {
                        return fail("exterior power split at n=" + std::to_string(n) + ", j=" + std::to_string(j));
                    }
                }
            }
        }
    }
    return r;
}

inline CheckResult check_orthonormality(const Scope &s)
{
    CheckResult r{"irreducible characters are orthonormal"};
    for (int n = 0; n <= s.hook_max_n; ++n) {
        const auto parts = oracle::partitions(n);
        std::vector<oracle::GradedCharacter> chars;
        Integer square_sum = 0;
        for (const auto &l : parts) {
            chars.push_back(oracle::irreducible_char(l));
            const auto dim = oracle::mn_char(l, oracle::CycleType(std::vector<int>(n, 1)));
            square_sum += Integer(static_cast<long>(dim)) * dim;
        }
        for (std::size_t i = 0; i < chars.size(); ++i) {
            for (std::size_t j = 0; j < chars.size(); ++j) {
                if (!(oracle::hall_inner(chars[i], chars[j]) == LaurentCoeff(i == j ? 1 : 0))) {
                    r.passed = false;
                    r.detail = parts[i].to_string() + " vs " + parts[j].to_string();
                    return r;
                }
            }
        }
        if (square_sum != factorial(n)) {
            r.passed = false;
            r.detail = "sum of squared dimensions at n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

/// Empty when every arity n <= max_n of the series is a genuine graded
/// character: integral, no negative q powers, non-negative integer
/// multiplicities.
inline std::string genuine_module_problem(const CycleIndexSeries &a, int max_n)
{
    for (int n = 0; n <= max_n; ++n) {
        const auto chi = oracle::character_from_cycle_index(a, n);
        for (const auto &[c, v] : chi.values) {
            for (const auto &[e, x] : v.terms()) {
                if (x.get_den() != 1) {
                    return "non-integral value at n=" + std::to_string(n) + ", class " + c.to_string();
                }
                if (e[0] < 0 || e[1] < 0 || e[2] < 0) {
                    return "negative exponent at n=" + std::to_string(n) + ", class " + c.to_string();
                }
            }
        }
        try {
            oracle::decompose(chi, true);
        } catch (const Error &e) {
            return "n=" + std::to_string(n) + ": " + e.what();
        }
    }
    return {};
}

inline CheckResult check_equivariant(const Scope &s)
{
    const int max_n = std::min(s.equivariant_max_n, s.trunc);
    return detail::over_grid("closed form is a genuine graded character", s, [max_n](const ModelParams &p) {
        return genuine_module_problem(theorem1_closed(p), max_n);
    });
}

/// Com o Lie is the regular representation, and z_lie agrees with the
/// cyclic-induction character of Lie(n).
inline CheckResult check_plethysm(const Scope &s)
{
    CheckResult r{"Com o Lie = regular representation; z_lie = Lie characters"};
    CycleIndexSeries regular(s.trunc);
    for (int n = 0; n <= s.trunc; ++n) {
        regular.add_term(PMonomial::p(1, n), LaurentCoeff(1));
    }
    auto diff = first_difference(plethysm(z_com(s.trunc), z_lie(s.trunc)), regular);
    if (!diff.empty()) {
        r.passed = false;
        r.detail = "Com o Lie " + diff;
        return r;
    }
    const auto lie = z_lie(s.trunc);
    for (int n = 1; n <= s.trunc; ++n) {
        diff = first_difference(extract_arity(lie, n), oracle::cycle_index_from_character(oracle::lie_char(n)));
        if (!diff.empty()) {
            r.passed = false;
            r.detail = "Lie(" + std::to_string(n) + ") " + diff;
            return r;
        }
    }
    return r;
}

inline std::vector<CheckResult> run_all(const Scope &s)
{
    return {check_closed_vs_pipeline(s), check_egf(s),     check_k2(s),         check_refinement(s),
            check_hooks(s),              check_orthonormality(s), check_equivariant(s), check_plethysm(s)};
}

} // namespace cycidx::verify
