#include "cft/quadfield.hpp"
#include "gen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cft;

namespace {

const std::vector<i64> kOrders{-3, -4, -7, -8, -56, -12, -27, -100, 5, 8, 12, 13, 21, 45, 56, 141};

QuadElement random_element(gen::Gen& g, const QuadOrder& o, bool integral) {
    return QuadElement(o, g.int_in(-1000, 1000), g.int_in(-1000, 1000), integral ? 1 : g.int_in(1, 30));
}

}  // namespace

TEST(QuadfieldProperty, NormMultiplicative) {
    gen::Gen g(10);
    for (i64 D : kOrders) {
        QuadOrder o(D);
        for (int i = 0; i < 1000; ++i) {
            QuadElement a = random_element(g, o, false), b = random_element(g, o, false);
            ASSERT_EQ((a * b).norm(), a.norm() * b.norm()) << D << " " << to_sqrt_form(a) << " " << to_sqrt_form(b);
        }
    }
}

TEST(QuadfieldProperty, TraceOfIntegralIsInteger) {
    gen::Gen g(11);
    for (i64 D : kOrders) {
        QuadOrder o(D);
        for (int i = 0; i < 500; ++i) {
            QuadElement a = random_element(g, o, true);
            QuadElement sum = a + a.conjugate();
            ASSERT_TRUE(sum.is_rational() && sum.is_integral()) << to_sqrt_form(a);
            ASSERT_EQ(Rational(sum.x()), a.trace());
            ASSERT_EQ(a.norm().get_den(), 1);
        }
    }
}

TEST(QuadfieldProperty, DiscriminantRoundTrip) {
    for (i64 D = -10'000; D <= 10'000; ++D) {
        const bool valid = (oracle::mod(D, 4) <= 1) && D != 0 && D != 1 && !(D > 0 && is_square(D));
        if (!valid) {
            EXPECT_ANY_THROW(make_discriminant(D)) << D;
            continue;
        }
        Discriminant d = make_discriminant(D);
        ASSERT_EQ(d.conductor * d.conductor * d.fundamental, D);
        ASSERT_TRUE(oracle::is_fundamental(d.fundamental)) << D;
    }
}

TEST(QuadfieldProperty, FundamentalUnitIsMinimal) {
    // Every unit in (1, eps) would be (x + y sqrt d)/2 with 0 < y and
    // x < trace(eps); search that box.
    for (i64 d = 5; d < 100; ++d) {
        if (!oracle::is_fundamental(d)) continue;
        QuadElement eps = fundamental_unit(d);
        ASSERT_EQ(abs(eps.norm()), 1) << d;
        const long double e = eps.real_value();
        ASSERT_GT(e, 1.0L);
        const i64 tr = eps.trace().get_num().get_si();
        for (i64 x = 1; x <= tr; ++x)
            for (i64 y = 1; y * y * d <= x * x + 4; ++y) {
                const i64 n = x * x - d * y * y;
                if (n != 4 && n != -4) continue;
                const long double u = (x + y * std::sqrt(static_cast<long double>(d))) / 2;
                EXPECT_FALSE(u > 1.0L + 1e-12L && u < e - 1e-9L) << d << ": (" << x << " + " << y << " sqrt d)/2";
            }
    }
}
