#include <gtest/gtest.h>

#include <cycidx/serialize.hpp>
#include <cycidx/theorems.hpp>

#include "random_series.hpp"

using namespace cycidx;

TEST(Json, SeriesLayout)
{
    auto a = CycleIndexSeries::monomial(2, PMonomial{{1, 1}}, LaurentCoeff::monomial(make_rational(-3, 2), -1, 2));
    a.add_term(PMonomial{}, LaurentCoeff(1));
    const auto j = io::to_json(a);
    EXPECT_EQ(j.dump(),
              R"({"terms":[{"coeff":[{"den":"1","num":"1","q":0,"u":0,"w":0}],"p":{}},)"
              R"({"coeff":[{"den":"2","num":"-3","q":-1,"u":2,"w":0}],"p":{"1":1}}],"trunc":2})");
}

TEST(Json, RoundTrip)
{
    test_support::SeriesGenerator gen(11);
    for (int i = 0; i < 10; ++i) {
        const auto a = gen(6);
        EXPECT_EQ(io::series_from_json(io::json::parse(io::to_json(a).dump())), a);
    }
    const auto z = theorem2_closed({2, 3, 6});
    EXPECT_EQ(io::series_from_json(io::to_json(z)), z);
}

TEST(Json, Deterministic)
{
    EXPECT_EQ(io::to_json(theorem1_closed({3, 3, 6})).dump(2), io::to_json(pipeline({3, 3, 6})).dump(2));
}

TEST(Json, RejectsMalformed)
{
    EXPECT_THROW(io::series_from_json(io::json::parse(R"({"terms":[]})")), Error);
    EXPECT_THROW(io::series_from_json(io::json::parse(R"({"trunc":1,"terms":[{"p":{"2":1},"coeff":[]}]})")), Error);
    EXPECT_THROW(io::series_from_json(io::json::parse(
                     R"({"trunc":1,"terms":[{"p":{"1":1},"coeff":[{"q":0,"u":0,"w":0,"num":"x","den":"1"}]}]})")),
                 Error);
}

TEST(Text, Rendering)
{
    EXPECT_EQ(to_string(LaurentCoeff::monomial(make_rational(-3, 2), -1, 2)), "(-3/2)*q^-1*u^2");
    EXPECT_EQ(to_string(LaurentCoeff(1) + LaurentCoeff::monomial(1, 1)), "(1) + (1)*q");
    EXPECT_EQ(io::q_polynomial_string(LaurentCoeff(1) + LaurentCoeff::monomial(4, 3) + LaurentCoeff::monomial(3, 4)),
              "1 + 4*q^3 + 3*q^4");
    EXPECT_EQ(io::q_polynomial_string(LaurentCoeff::monomial(-1, 1)), "-q");
    EXPECT_EQ((PMonomial{{1, 2}, {2, 1}}).to_string(), "p1^2*p2");
}

TEST(Text, Rationals)
{
    EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
    EXPECT_EQ(parse_rational("-3/2"), make_rational(-3, 2));
    EXPECT_EQ(parse_rational("4/2"), 2);
    EXPECT_THROW(parse_rational("abc"), Error);
    EXPECT_THROW(parse_rational("1/0"), Error);
}
