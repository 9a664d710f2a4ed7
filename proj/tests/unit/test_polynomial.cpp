#include "cft/error.hpp"
#include "cft/polynomial.hpp"

#include <gtest/gtest.h>

using namespace cft;

TEST(Polynomial, ParseAndRender) {
    EXPECT_EQ(parse_polynomial("x^4+2x^2-7"), make_polynomial({-7, 0, 2, 0, 1}));
    EXPECT_EQ(parse_polynomial("x^4 + 2*x^2 - 7"), make_polynomial({-7, 0, 2, 0, 1}));
    EXPECT_EQ(parse_polynomial("-x^3+x-1"), make_polynomial({-1, 1, 0, -1}));
    EXPECT_EQ(parse_polynomial("3"), make_polynomial({3}));
    EXPECT_EQ(to_string(make_polynomial({-7, 0, 2, 0, 1})), "x^4+2x^2-7");
    for (const char* text : {"x^4+1", "x^3-2", "-x^3+x-1", "5x^2-3x+1", "x"})
        EXPECT_EQ(to_string(parse_polynomial(text)), text);
    EXPECT_THROW(parse_polynomial("x^^2"), ParseError);
    EXPECT_THROW(parse_polynomial("y^2+1"), ParseError);
    EXPECT_THROW(parse_polynomial(""), ParseError);
}

TEST(Polynomial, Discriminants) {
    EXPECT_EQ(discriminant(parse_polynomial("x^2+1")), -4);
    EXPECT_EQ(discriminant(parse_polynomial("x^3-2")), -108);
    EXPECT_EQ(discriminant(parse_polynomial("x^4+1")), 256);
    EXPECT_EQ(discriminant(parse_polynomial("x^4+2x^2-7")), -114688);
    EXPECT_EQ(discriminant(parse_polynomial("x^2-2x+1")), 0);
}

TEST(Polynomial, FactorDegreesOverFp) {
    EXPECT_EQ(fp::factor_degrees(fp::reduce(parse_polynomial("x^4+1"), 3), 3), (std::vector<int>{2, 2}));
    EXPECT_EQ(fp::factor_degrees(fp::reduce(parse_polynomial("x^3-2"), 7), 7), (std::vector<int>{3}));
    EXPECT_TRUE(fp::has_root(fp::reduce(parse_polynomial("x^4+2x^2-7"), 23), 23));
    EXPECT_FALSE(fp::is_squarefree(fp::reduce(parse_polynomial("x^2+1"), 2), 2));
}
