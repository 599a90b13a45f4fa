#include <gtest/gtest.h>

#include <cycidx/oracle.hpp>
#include <cycidx/theorems.hpp>

using namespace cycidx;
using namespace cycidx::oracle;

namespace {

std::vector<std::int64_t> values(const GradedCharacter &chi)
{
    std::vector<std::int64_t> out;
    for (const auto &[c, v] : chi.values) {
        out.push_back(v.coeff({0, 0, 0}).get_num().get_si());
    }
    return out;
}

CycleType identity(int n) { return CycleType(std::vector<int>(n, 1)); }

} // namespace

TEST(Partitions, Enumeration)
{
    EXPECT_EQ(partitions(0), (std::vector<CycleType>{CycleType{}}));
    EXPECT_EQ(partitions(3), (std::vector<CycleType>{{3}, {2, 1}, {1, 1, 1}}));
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n < 10; ++n) {
        EXPECT_EQ(static_cast<int>(partitions(n).size()), counts[n]);
    }
    try {
        partitions(26);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
    }
}

TEST(CycleTypes, ClassData)
{
    EXPECT_EQ(CycleType({2, 1, 1}).z(), 4);
    EXPECT_EQ(CycleType({2, 1, 1}).class_size(), 6);
    EXPECT_EQ(CycleType({3, 3}).z(), 18);
    EXPECT_EQ(CycleType({3, 1, 2}).parts, (std::vector<int>{3, 2, 1}));
    Integer total = 0;
    for (const auto &c : partitions(6)) {
        total += c.class_size();
    }
    EXPECT_EQ(total, 720);
}

TEST(MurnaghanNakayama, KnownValues)
{
    EXPECT_EQ(mn_char({1, 1}, {2}), -1);
    for (const auto &mu : partitions(5)) {
        EXPECT_EQ(mn_char({5}, mu), 1);
        EXPECT_EQ(mn_char({1, 1, 1, 1, 1}, mu), mu.sign());
    }
    EXPECT_EQ(values(irreducible_char({2, 1})), (std::vector<std::int64_t>{-1, 0, 2}));
    EXPECT_EQ(mn_char({3, 2}, identity(5)), 5);
    EXPECT_EQ(mn_char({3, 2, 1}, identity(6)), 16);
    EXPECT_EQ(mn_char({2, 2}, {2, 2}), 2);
    EXPECT_EQ(mn_char({2, 2}, {3, 1}), -1);
    try {
        mn_char({2, 1}, {2});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
    }
}

TEST(MurnaghanNakayama, Orthonormal)
{
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions(n);
        Integer squares = 0;
        for (const auto &l : parts) {
            const auto dim = mn_char(l, identity(n));
            squares += Integer(static_cast<long>(dim * dim));
            for (const auto &m : parts) {
                EXPECT_EQ(hall_inner(irreducible_char(l), irreducible_char(m)), LaurentCoeff(l == m ? 1 : 0));
            }
        }
        EXPECT_EQ(squares, factorial(n));
    }
}

TEST(ExteriorPowers, Traces)
{
    EXPECT_EQ(ext_power_chars(3, {3}), (std::vector<std::int64_t>{1, 0, 0, 1}));
    EXPECT_EQ(ext_power_chars(3, {2, 1}), (std::vector<std::int64_t>{1, 1, -1, -1}));
    EXPECT_EQ(ext_power_chars(4, identity(4)), (std::vector<std::int64_t>{1, 4, 6, 4, 1}));
}

TEST(InducedHook, Values)
{
    for (const auto &sigma : partitions(4)) {
        EXPECT_EQ(induced_hook_char(4, 0, sigma), 1);
        EXPECT_EQ(induced_hook_char(4, 4, sigma), sigma.sign());
    }
    EXPECT_EQ(induced_hook_char(3, 1, {2, 1}), 1);
    try {
        induced_hook_char(3, 4, {3});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidRange);
    }
}

TEST(InducedHook, EqualsExteriorPowers)
{
    for (int n = 0; n <= 8; ++n) {
        for (const auto &sigma : partitions(n)) {
            const auto ext = ext_power_chars(n, sigma);
            for (int j = 0; j <= n; ++j) {
                EXPECT_EQ(induced_hook_char(n, j, sigma), ext[j]);
            }
        }
    }
}

TEST(HookCharacters, ThreeRoutesAgree)
{
    EXPECT_EQ(values(hook_char_alternating(3, 2)), (std::vector<std::int64_t>{-1, 0, 2}));
    EXPECT_EQ(hook_char_alternating(4, 4), sign_char(4));
    EXPECT_EQ(hook_char_alternating(5, 1), trivial_char(5));
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto mn = irreducible_char(hook_shape(n, k));
            EXPECT_EQ(hook_char_alternating(n, k), mn) << n << " " << k;
            EXPECT_EQ(hook_char_induced(n, k), mn) << n << " " << k;
        }
    }
    EXPECT_THROW(hook_char_alternating(2, 3), Error);
    EXPECT_THROW(hook_char_induced(2, 0), Error);
}

TEST(HookCharacters, ExteriorPowerSplit)
{
    // Wedge^j W_n = Wedge^j V_(n-1,1) + Wedge^(j-1) V_(n-1,1) for n > j.
    for (int n = 2; n <= 8; ++n) {
        for (int j = 1; j < n; ++j) {
            for (const auto &sigma : partitions(n)) {
                const auto lhs = ext_power_chars(n, sigma)[j];
                EXPECT_EQ(mn_char(hook_shape(n, j + 1), sigma) + mn_char(hook_shape(n, j), sigma), lhs);
                EXPECT_EQ(hook_char_alternating(n, j + 1).at(sigma) + hook_char_alternating(n, j).at(sigma),
                          LaurentCoeff(static_cast<long>(lhs)));
            }
        }
    }
}

TEST(CycleIndex, FromCharacter)
{
    const auto triv = cycle_index_from_character(trivial_char(2));
    EXPECT_EQ(triv.coeff(PMonomial::p(1, 2)), LaurentCoeff(make_rational(1, 2)));
    EXPECT_EQ(triv.coeff(PMonomial::p(2)), LaurentCoeff(make_rational(1, 2)));
    const auto sign = cycle_index_from_character(sign_char(2));
    EXPECT_EQ(sign.coeff(PMonomial::p(2)), LaurentCoeff(make_rational(-1, 2)));
    EXPECT_EQ(cycle_index_from_character(lie_char(2)), sign);
}

TEST(CycleIndex, RoundTrip)
{
    const auto z = theorem1_closed({2, 3, 5});
    for (int n = 0; n <= 5; ++n) {
        const auto chi = character_from_cycle_index(z, n);
        EXPECT_EQ(cycle_index_from_character(chi), extract_arity(z, n));
        EXPECT_EQ(character_from_cycle_index(cycle_index_from_character(chi), n), chi);
    }
    EXPECT_EQ(character_from_cycle_index(z_com(3), 3), trivial_char(3));
    EXPECT_EQ(character_from_cycle_index(z, 3).dimension(), LaurentCoeff(1) + LaurentCoeff::monomial(1, 3));
    try {
        character_from_cycle_index(z, 6);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::PrecisionExceeded);
    }
}

TEST(HallInner, Pairings)
{
    EXPECT_EQ(hall_inner(trivial_char(4), trivial_char(4)), LaurentCoeff(1));
    EXPECT_EQ(hall_inner(trivial_char(4), sign_char(4)), LaurentCoeff());
    for (const auto &l : partitions(5)) {
        EXPECT_EQ(hall_inner(regular_char(5), irreducible_char(l)),
                  LaurentCoeff(static_cast<long>(mn_char(l, identity(5)))));
    }
    try {
        hall_inner(trivial_char(3), trivial_char(4));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
    }
}

TEST(LieCharacter, Dimensions)
{
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(lie_char(n).dimension(), LaurentCoeff(Rational(factorial(n - 1))));
    }
    EXPECT_EQ(values(lie_char(3)), (std::vector<std::int64_t>{-1, 0, 2}));
}

TEST(Decompose, Basics)
{
    const auto dec = decompose(trivial_char(4));
    ASSERT_EQ(dec.size(), 1u);
    EXPECT_EQ(dec.begin()->first.first, CycleType{4});
    EXPECT_EQ(dec.begin()->second, 1);

    for (int k = 2; k <= 6; ++k) {
        for (int n = k; n <= 7; ++n) {
            const auto chi = character_from_cycle_index(z_hook(k, 7), n);
            const auto hook = decompose(chi);
            ASSERT_EQ(hook.size(), 1u);
            EXPECT_EQ(hook.begin()->first.first, hook_shape(n, k));
            EXPECT_EQ(hook.begin()->first.second, (Exponents{k - 2, 0, 0}));
            EXPECT_EQ(hook.begin()->second, 1);
        }
    }
}

TEST(Decompose, ThreePointsInThePlaneAvoidingTripleCollisions)
{
    const auto dec = decompose(character_from_cycle_index(theorem1_closed({2, 3, 3}), 3));
    ASSERT_EQ(dec.size(), 2u);
    Integer degree3 = 0;
    for (const auto &[key, mult] : dec) {
        const auto &[shape, e] = key;
        EXPECT_EQ(shape, CycleType{3});
        EXPECT_TRUE(e[0] == 0 || e[0] == 3);
        if (e[0] == 3) {
            degree3 += mult;
        }
    }
    EXPECT_EQ(degree3, 1);
}

TEST(Decompose, Errors)
{
    auto chi = sign_char(3);
    chi.values.at(CycleType{1, 1, 1}) = LaurentCoeff(-1);
    chi.values.at(CycleType{2, 1}) = LaurentCoeff(1);
    chi.values.at(CycleType{3}) = LaurentCoeff(-1);
    try {
        decompose(chi);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NegativeMultiplicity);
    }
    EXPECT_NO_THROW(decompose(chi, false));

    auto half = trivial_char(2);
    half.values.at(CycleType{2}) = LaurentCoeff(0);
    try {
        decompose(half, false);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonIntegralMultiplicity);
    }
}
