#include "cft/error.hpp"
#include "cft/padic.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cft;

namespace {

BigInt unit_mod(const PadicNumber& x, int k) { return x.unit() % prime_power(x.prime(), k); }

}  // namespace

TEST(PadicNumber, RationalRoundTripAndRendering) {
    PadicNumber x = PadicNumber::from_rational(Rational(80, 3), 5, 20);
    EXPECT_EQ(x.valuation(), 1);
    EXPECT_EQ(x.precision(), 20);
    EXPECT_TRUE(PadicNumber::from_rational(x.to_rational(), 5, 20).agrees_with(x));
    EXPECT_EQ(to_string(PadicNumber::from_integer(80, 5)), "5^1 * 16 + O(5^21)");
    EXPECT_EQ(to_string(PadicNumber::zero(5, 20)), "O(5^20)");
    EXPECT_THROW(PadicNumber::zero(5, 20).valuation(), DomainError);
    EXPECT_THROW(PadicNumber::from_integer(3, 4), DomainError);
}

TEST(PadicNumber, ArithmeticTracksPrecision) {
    auto a = PadicNumber::from_integer(1, 5, 10), b = PadicNumber::from_integer(-1 + 5 * 5 * 5, 5, 10);
    PadicNumber s = a + b;  // 125: valuation 3, only 7 digits survive
    EXPECT_EQ(s.valuation(), 3);
    EXPECT_EQ(s.absolute_precision(), 10);
    PadicNumber p = PadicNumber::from_integer(10, 5, 8) * PadicNumber::from_integer(7, 5, 12);
    EXPECT_EQ(p.valuation(), 1);
    EXPECT_EQ(p.precision(), 8);
    PadicNumber q = PadicNumber::from_integer(1, 5) / PadicNumber::from_integer(5, 5);
    EXPECT_EQ(q.valuation(), -1);
    EXPECT_THROW(PadicNumber::from_integer(1, 5) / PadicNumber::zero(5, 10), DomainError);
    EXPECT_THROW(PadicNumber::from_integer(1, 5) + PadicNumber::from_integer(1, 7), DomainError);
}

TEST(PadicExp, Examples) {
    EXPECT_TRUE(padic_exp(PadicNumber::zero(5, 20)).agrees_with(PadicNumber::from_integer(1, 5)));
    PadicNumber e = padic_exp(PadicNumber::from_integer(5, 5, 20));
    EXPECT_EQ(e.valuation(), 0);
    EXPECT_EQ(unit_mod(e, 3), 81);
    EXPECT_THROW(padic_exp(PadicNumber::from_integer(2, 2)), DomainError);
    EXPECT_THROW(padic_exp(PadicNumber::from_integer(7, 5)), DomainError);
    EXPECT_NO_THROW(padic_exp(PadicNumber::from_integer(4, 2)));
}

TEST(PadicExp, MatchesExactSeries) {
    for (u64 p : {2u, 3u, 5u, 7u}) {
        const int k = 12;
        for (i64 t = 1; t < 40; ++t) {
            const i64 x = static_cast<i64>(p == 2 ? 4 : p) * t;
            PadicNumber e = padic_exp(PadicNumber::from_integer(x, p, k));
            // Terms x^n/n! have valuation >= n/(p-1)ish; 6k terms is ample.
            mpz_class ref = oracle::exp_series_mod(mpq_class(x), p, k, 6 * k + 10);
            ASSERT_EQ(unit_mod(e, k), BigInt(ref)) << "p=" << p << " x=" << x;
        }
    }
}

TEST(PadicLog, Examples) {
    EXPECT_TRUE(padic_log(PadicNumber::from_integer(1, 5)).is_zero());
    PadicNumber l = padic_log(PadicNumber::from_integer(6, 5, 20));
    EXPECT_EQ(l.valuation(), 1);
    EXPECT_EQ((l.unit() * 5) % 125, 55);
    EXPECT_EQ(padic_log(PadicNumber::from_integer(10, 3)).valuation(), 2);
    EXPECT_THROW(padic_log(PadicNumber::from_integer(2, 5)), DomainError);
    EXPECT_THROW(padic_log(PadicNumber::from_integer(5, 5)), DomainError);
}

TEST(PadicLog, MatchesExactSeries) {
    for (u64 p : {3u, 5u, 7u, 2u}) {
        const int k = 10;
        const i64 step = p == 2 ? 4 : static_cast<i64>(p);
        for (i64 t = 1; t < 30; ++t) {
            const i64 u = 1 + step * t;
            PadicNumber l = padic_log(PadicNumber::from_integer(u, p, k + 4));
            const BigInt pk = prime_power(p, k);
            BigInt value = l.is_zero() ? BigInt(0) : BigInt(l.unit() * prime_power(p, l.valuation()) % pk);
            mpz_class ref = oracle::log_series_mod(mpq_class(u), p, k, 12 * k + 20);
            ASSERT_EQ(value, BigInt(ref)) << "p=" << p << " u=" << u;
        }
    }
}

TEST(NthPower, Examples) {
    EXPECT_TRUE(is_nth_power_unit(PadicNumber::from_integer(1, 5), 7));
    EXPECT_TRUE(is_nth_power_unit(PadicNumber::from_integer(4, 5), 2));
    EXPECT_FALSE(is_nth_power_unit(PadicNumber::from_integer(2, 5), 2));
    EXPECT_TRUE(is_nth_power_unit(PadicNumber::from_integer(17, 2), 2));
    EXPECT_FALSE(is_nth_power_unit(PadicNumber::from_integer(5, 2), 2));
    EXPECT_THROW(is_nth_power_unit(PadicNumber::from_integer(5, 5), 2), DomainError);
}

TEST(NthPower, CubesModSevenAgreeWithResidueCount) {
    // For p = 7, n = 3: a unit is a cube iff its residue mod 7 is a cube.
    std::set<i64> cubes;
    for (i64 r = 1; r < 7; ++r) cubes.insert(r * r * r % 7);
    for (i64 u = 1; u < 200; ++u) {
        if (u % 7 == 0) continue;
        EXPECT_EQ(is_nth_power_unit(PadicNumber::from_integer(u, 7), 3), cubes.count(u % 7) == 1) << u;
    }
}

TEST(HenselSqrt, Examples) {
    auto one = hensel_sqrt(PadicNumber::from_integer(1, 7));
    ASSERT_TRUE(one);
    EXPECT_TRUE(((*one) * (*one)).agrees_with(PadicNumber::from_integer(1, 7)));

    auto r = hensel_sqrt(PadicNumber::from_integer(2, 7), 3);
    ASSERT_TRUE(r);
    const BigInt low = unit_mod(*r, 3);
    EXPECT_TRUE(low == 108 || low == 343 - 108) << low;
    EXPECT_TRUE(low % 7 == 3 || low % 7 == 4);

    EXPECT_FALSE(hensel_sqrt(PadicNumber::from_integer(3, 2)));
    EXPECT_FALSE(hensel_sqrt(PadicNumber::from_integer(3, 7)));   // non-residue
    EXPECT_FALSE(hensel_sqrt(PadicNumber::from_integer(14, 7)));  // odd valuation
    auto s = hensel_sqrt(PadicNumber::from_integer(49 * 2, 7));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->valuation(), 1);
}

TEST(HenselSqrt, SquaresOfRandomUnitsAreRecovered) {
    for (u64 p : {2u, 3u, 5u, 13u}) {
        for (i64 x = 1; x < 300; x += 7) {
            if (x % static_cast<i64>(p) == 0) continue;
            PadicNumber a = PadicNumber::from_integer(x * x, p, 20);
            auto r = hensel_sqrt(a);
            ASSERT_TRUE(r) << p << " " << x;
            EXPECT_TRUE(((*r) * (*r)).agrees_with(a));
        }
    }
}
