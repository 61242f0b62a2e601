#include "acm5/linalg.hpp"
#include "acm5/scalar.hpp"

#include <gtest/gtest.h>

namespace acm5 {
namespace {

TEST(Scalar, ParsesIntegersAndFractions)
{
    EXPECT_EQ(parse_scalar("3"), Scalar(3));
    EXPECT_EQ(parse_scalar("-3/4"), Scalar(-3, 4));
    EXPECT_EQ(parse_scalar(" 6/8 "), Scalar(3, 4));
    EXPECT_EQ(parse_scalar("+2"), Scalar(2));
}

TEST(Scalar, RejectsMalformedLiterals)
{
    for (const char* bad : {"", "1/0", "0.5", "1/-2", "a", "1//2", "3/"})
        EXPECT_THROW(parse_scalar(bad), std::invalid_argument) << bad;
}

TEST(Scalar, FormatsWithoutDecimals)
{
    EXPECT_EQ(format_scalar(Scalar(-40, 9)), "-40/9");
    EXPECT_EQ(format_scalar(Scalar(4, 2)), "2");
    EXPECT_EQ(parse_scalar(format_scalar(Scalar(-22, 9))), Scalar(-22, 9));
}

TEST(Linalg, RrefAndRank)
{
    linalg::Mat m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(linalg::rank(m), 2u);
    auto piv = linalg::rref(m);
    ASSERT_EQ(piv.size(), 2u);
    EXPECT_EQ(m[0], (linalg::Vec{1, 0, 1}));
    EXPECT_EQ(m[1], (linalg::Vec{0, 1, 1}));
}

TEST(Linalg, NullSpaceIsAnnihilated)
{
    const linalg::Mat m = {{1, 2, 3, 4}, {0, 1, Scalar(1, 2), 0}};
    const auto ns = linalg::null_space(m, 4);
    ASSERT_EQ(ns.size(), 2u);
    for (const auto& v : ns)
        for (const auto& row : m)
            EXPECT_EQ(linalg::dot(row, v), 0);
}

TEST(Linalg, InverseOfRationalMatrix)
{
    const linalg::Mat a = {{2, 1}, {Scalar(1, 3), 1}};
    const linalg::Mat inv = linalg::inverse(a);
    EXPECT_EQ(inv[0][0], Scalar(3, 5));
    EXPECT_EQ(inv[0][1], Scalar(-3, 5));
    EXPECT_EQ(inv[1][0], Scalar(-1, 5));
    EXPECT_EQ(inv[1][1], Scalar(6, 5));
    EXPECT_THROW(linalg::inverse({{1, 2}, {2, 4}}), std::exception);
}

TEST(Linalg, SpanCoordinatesOfNonOrthogonalFamily)
{
    const linalg::SpanCoordinates s({{1, 1, 0}, {1, 0, 1}});
    const auto c = s.coords({3, 1, 2});
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (linalg::Vec{1, 2}));
    EXPECT_FALSE(s.coords({0, 0, 1}));
}

} // namespace
} // namespace acm5
