#include "cft/error.hpp"
#include "cft/quadfield.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cft;

TEST(Discriminant, Examples) {
    EXPECT_EQ(make_discriminant(-56), (Discriminant{-56, -56, 1}));
    EXPECT_EQ(make_discriminant(-12), (Discriminant{-12, -3, 2}));
    EXPECT_EQ(make_discriminant(8), (Discriminant{8, 8, 1}));
    EXPECT_THROW(make_discriminant(0), DomainError);
    EXPECT_THROW(make_discriminant(1), DomainError);
    EXPECT_THROW(make_discriminant(9), DomainError);   // square
    EXPECT_THROW(make_discriminant(-6), DomainError);  // 2 mod 4
}

TEST(Discriminant, RoundTripAgainstFundamentalOracle) {
    for (i64 D = -10'000; D <= 10'000; ++D) {
        const i64 r = oracle::mod(D, 4);
        const bool square = D >= 0 && is_square(D);
        if ((r != 0 && r != 1) || square) continue;
        Discriminant d = make_discriminant(D);
        ASSERT_EQ(d.conductor * d.conductor * d.fundamental, D);
        ASSERT_TRUE(oracle::is_fundamental(d.fundamental)) << D;
        EXPECT_EQ(is_fundamental_discriminant(D), oracle::is_fundamental(D)) << D;
        // The largest f with D/f^2 fundamental is the only one.
        for (i64 f = 1; f * f <= std::abs(D); ++f) {
            if (D % (f * f) || f == d.conductor) continue;
            EXPECT_FALSE(oracle::is_fundamental(D / (f * f))) << D << " f=" << f;
        }
    }
}

TEST(QuadElement, NormExamples) {
    QuadOrder one(-4);
    EXPECT_EQ(QuadElement(one, 1, 0).norm(), 1);
    EXPECT_EQ(QuadElement(one, 4, 1).norm(), 5);  // 2 + i with w = -2 + i
    QuadOrder o13(13);
    // (3 + sqrt 13)/2 = w - 5 since w = (13 + sqrt 13)/2
    EXPECT_EQ(QuadElement(o13, -5, 1).norm(), -1);
    EXPECT_EQ(parse_sqrt_form(o13, "3/2 + 1/2*sqrt(13)").norm(), -1);
}

TEST(QuadElement, ConjugateExamples) {
    QuadOrder o(-4);
    QuadElement seven(o, 7, 0);
    EXPECT_EQ(seven.conjugate(), seven);
    QuadElement w(o, 0, 1);
    EXPECT_EQ(w.conjugate(), QuadElement(o, -4, -1));  // D - w
    QuadElement z(o, 4, 1);
    EXPECT_EQ(z.conjugate(), QuadElement(o, 0, -1));
    EXPECT_EQ(to_sqrt_form(z.conjugate()), "2 - 1*sqrt(-1)");
}

TEST(QuadElement, RenderingRoundTrips) {
    for (i64 D : {-4, -3, -56, 5, 8, 12, 13, -12}) {
        QuadOrder o(D);
        for (i64 x = -4; x <= 4; ++x)
            for (i64 y = -3; y <= 3; ++y)
                for (i64 den : {1, 2, 3}) {
                    QuadElement a(o, x, y, den);
                    EXPECT_EQ(parse_sqrt_form(o, to_sqrt_form(a)), a) << to_sqrt_form(a);
                    EXPECT_EQ(parse_basis_form(o, to_basis_form(a)), a) << to_basis_form(a);
                }
    }
}

TEST(QuadElement, CrossOrderArithmeticRejected) {
    QuadOrder a(-4), b(-8);
    EXPECT_THROW(QuadElement(a, 1, 1) + QuadElement(b, 1, 1), DomainError);
}

TEST(FundamentalUnit, Examples) {
    EXPECT_EQ(to_sqrt_form(fundamental_unit(8)), "1 + 1*sqrt(2)");
    EXPECT_EQ(fundamental_unit(8).norm(), -1);
    EXPECT_EQ(to_sqrt_form(fundamental_unit(13)), "3/2 + 1/2*sqrt(13)");
    EXPECT_EQ(to_sqrt_form(fundamental_unit(12)), "2 + 1*sqrt(3)");
    EXPECT_EQ(fundamental_unit(12).norm(), 1);
    EXPECT_THROW(fundamental_unit(-4), DomainError);
}

// Smallest (x + y sqrt d)/2 > 1 with x^2 - d y^2 = +-4 and x, y > 0.
static std::pair<i64, i64> pell_oracle(i64 d) {
    for (i64 y = 1;; ++y) {
        for (i64 s : {-4, 4}) {
            const i64 x2 = d * y * y + s;
            if (x2 > 0 && is_square(x2)) return {static_cast<i64>(isqrt(static_cast<u64>(x2))), y};
        }
    }
}

TEST(FundamentalUnit, MatchesPellSearchBelow100) {
    for (i64 d = 5; d < 100; ++d) {
        if (!oracle::is_fundamental(d)) continue;
        auto [x, y] = pell_oracle(d);
        QuadElement eps = fundamental_unit(d);
        auto [a, b] = eps.sqrt_coordinates();  // eps = a + b*sqrt(m), m = d or d/4
        // (x + y sqrt d)/2 in terms of sqrt(m): sqrt d = 2 sqrt(m) when d = 4m
        Rational ea(x, 2), eb = (d % 4 == 0) ? Rational(y) : Rational(y, 2);
        ea.canonicalize();
        eb.canonicalize();
        EXPECT_EQ(a, ea) << d;
        EXPECT_EQ(b, eb) << d;
        Rational n = eps.norm();
        EXPECT_TRUE(n == 1 || n == -1);
    }
}

TEST(Torsion, Examples) {
    EXPECT_EQ(unit_torsion(-4).torsion_order, 4);
    EXPECT_EQ(unit_torsion(-3).torsion_order, 6);
    EXPECT_EQ(unit_torsion(-56).torsion_order, 2);
    EXPECT_THROW(unit_torsion(5), DomainError);
}

TEST(Torsion, MatchesNormOneEnumeration) {
    for (i64 D : {-3, -4, -7, -8, -11, -12, -15, -16, -56}) {
        QuadOrder o(D);
        // N(x + y w) = 1 has finitely many solutions; |x|, |y| <= 4 is ample.
        int count = 0;
        for (i64 x = -6; x <= 6; ++x)
            for (i64 y = -6; y <= 6; ++y) count += QuadElement(o, x, y).norm() == 1;
        EXPECT_EQ(unit_torsion(D).torsion_order, count) << D;
        EXPECT_EQ(static_cast<int>(torsion_units(o).size()), count) << D;
    }
}
