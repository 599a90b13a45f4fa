#include <gtest/gtest.h>

#include <cycidx/operads.hpp>
#include <cycidx/oracle.hpp>

#include "random_series.hpp"

using namespace cycidx;
using oracle::cycle_index_from_character;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

CycleIndexSeries term(int trunc, PMonomial m, LaurentCoeff c) { return CycleIndexSeries::monomial(trunc, m, c); }

} // namespace

TEST(Mobius, SmallValues)
{
    const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(mobius(n), expected[n - 1]) << n;
    }
    EXPECT_EQ(mobius(30), -1);
    EXPECT_EQ(mobius(49), 0);
}

TEST(ZCom, Coefficients)
{
    const auto z = z_com(2);
    EXPECT_EQ(z, CycleIndexSeries::one(2) + term(2, PMonomial::p(1), 1) + term(2, PMonomial::p(1, 2), r(1, 2))
                     + term(2, PMonomial::p(2), r(1, 2)));
    EXPECT_EQ(z_com(0), CycleIndexSeries::one(0));
    // 1 / z_lambda on every class.
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(extract_arity(z_com(6), n), cycle_index_from_character(oracle::trivial_char(n)));
    }
}

TEST(ZLie, Arities)
{
    EXPECT_EQ(z_lie(1), term(1, PMonomial::p(1), 1));
    EXPECT_EQ(z_lie(2), term(2, PMonomial::p(1), 1) + term(2, PMonomial::p(1, 2), r(1, 2))
                            - term(2, PMonomial::p(2), r(1, 2)));
    const auto a3 = extract_arity(z_lie(3), 3);
    EXPECT_EQ(a3, term(3, PMonomial::p(1, 3), r(1, 3)) - term(3, PMonomial::p(3), r(1, 3)));
    // dim Lie(3) = 2.
    EXPECT_EQ(specialize_egf(a3)[3] * Rational(6), LaurentCoeff(2));
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(extract_arity(z_lie(7), n), cycle_index_from_character(oracle::lie_char(n))) << n;
        EXPECT_EQ(specialize_egf(z_lie(7))[n] * Rational(factorial(n)), LaurentCoeff(Rational(factorial(n - 1))));
    }
}

TEST(ZLieRefined, BracketCount)
{
    const auto plain = z_lie(6);
    const auto refined = z_lie_refined(6);
    EXPECT_EQ(extract_arity(refined, 1), term(1, PMonomial::p(1), 1));
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(extract_arity(refined, n), LaurentCoeff::monomial(1, 0, n - 1) * extract_arity(plain, n));
    }
    EXPECT_EQ(erase_refinement(refined), plain);
}

TEST(ZHook, VanishesBelowK)
{
    for (int k = 2; k <= 7; ++k) {
        const auto hook = z_hook(k, 8);
        for (const auto &[m, c] : hook.terms()) {
            EXPECT_GE(m.cardinality(), k);
        }
    }
    EXPECT_TRUE(z_hook(5, 3).is_zero());
}

TEST(ZHook, SmallCases)
{
    // k = 2, arity 2: the sign representation in degree 0.
    EXPECT_EQ(extract_arity(z_hook(2, 4), 2), cycle_index_from_character(oracle::sign_char(2)));
    // k = 3, arity 3: q times the sign representation of Sigma_3.
    const auto expected = term(3, PMonomial::p(1, 3), LaurentCoeff::monomial(r(1, 6), 1))
        - term(3, PMonomial{{1, 1}, {2, 1}}, LaurentCoeff::monomial(r(1, 2), 1))
        + term(3, PMonomial::p(3), LaurentCoeff::monomial(r(1, 3), 1));
    EXPECT_EQ(extract_arity(z_hook(3, 5), 3), expected);
}

TEST(ZHook, MatchesHookCharacters)
{
    for (int k = 2; k <= 8; ++k) {
        const auto hook = z_hook(k, 8);
        for (int n = k; n <= 8; ++n) {
            const auto chi = oracle::irreducible_char(oracle::hook_shape(n, k));
            EXPECT_EQ(extract_arity(hook, n), LaurentCoeff::monomial(1, k - 2) * cycle_index_from_character(chi))
                << "n=" << n << " k=" << k;
            // Dimension binom(n-1, k-1).
            EXPECT_EQ(specialize_egf(hook)[n] * Rational(factorial(n)),
                      LaurentCoeff::monomial(Rational(binomial(n - 1, k - 1)), k - 2));
        }
    }
}

TEST(ZHook, InvalidK)
{
    try {
        z_hook(1, 4);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidK);
    }
    EXPECT_THROW(z_hook_refined(0, 4), Error);
}

TEST(ZHookRefined, Gradings)
{
    for (int k = 2; k <= 5; ++k) {
        const auto plain = z_hook(k, 7);
        const auto refined = z_hook_refined(k, 7);
        EXPECT_EQ(erase_refinement(refined), plain);
        for (int n = k; n <= 7; ++n) {
            EXPECT_EQ(extract_arity(refined, n), LaurentCoeff::monomial(1, 0, n - k, 1) * extract_arity(plain, n));
        }
    }
    // k = 3, arity 4: exactly one short and one long bracket everywhere.
    const auto arity4 = extract_arity(z_hook_refined(3, 5), 4);
    for (const auto &[m, c] : arity4.terms()) {
        for (const auto &[e, v] : c.terms()) {
            EXPECT_EQ(e[1], 1);
            EXPECT_EQ(e[2], 1);
        }
    }
}

TEST(Suspend, IdentityAndDegrees)
{
    test_support::SeriesGenerator gen(7);
    const auto a = gen(6);
    EXPECT_EQ(suspend(a, 1), a);
    EXPECT_EQ(suspend(suspend(a, 2), 2), suspend(a, 3));
    EXPECT_EQ(suspend(suspend(a, 3), 2), suspend(a, 4));

    // Lie(2) = sign in degree 0 becomes trivial in degree 1.
    const auto lie2 = extract_arity(z_lie(2), 2);
    EXPECT_EQ(suspend(lie2, 2), LaurentCoeff::monomial(1, 1) * cycle_index_from_character(oracle::trivial_char(2)));
    EXPECT_THROW(suspend(lie2, 0), Error);
}

TEST(Suspend, DimensionShift)
{
    // The identity class p1^n picks up q^((n-1)(d-1)) and no sign.
    const auto com = z_com(6);
    for (int d = 1; d <= 4; ++d) {
        const auto egf = specialize_egf(suspend(com, d));
        for (int n = 1; n <= 6; ++n) {
            const int shift = (n - 1) * (d - 1);
            EXPECT_EQ(egf[n] * Rational(factorial(n)), LaurentCoeff::monomial(1, shift));
        }
    }
}

TEST(UnitSeries, Basics)
{
    EXPECT_EQ(unit_series(4), term(4, PMonomial::p(1), 1));
    const auto z = z_com(4);
    EXPECT_EQ(plethysm(unit_series(4), z - CycleIndexSeries::one(4)), z - CycleIndexSeries::one(4));
    EXPECT_EQ(specialize_egf(unit_series(4))[1], LaurentCoeff(1));
}
