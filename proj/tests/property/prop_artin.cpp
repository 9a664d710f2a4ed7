#include "cft/artin.hpp"
#include "gen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace cft;

TEST(ArtinProperty, FrobeniusOrderIsResidueDegree) {
    for (u64 m = 3; m <= 60; ++m)
        for (u64 p : oracle::primes_upto(1000)) {
            if (m % p == 0) continue;
            Frobenius fr = frobenius_cyclotomic(p, m);
            DecompositionType t = decomposition_type_cyclotomic(p, m);
            ASSERT_EQ(fr.element, (ResidueClass{m, p % m}));
            ASSERT_EQ(fr.order, t.f) << p << " " << m;
            ASSERT_EQ(fr.order, oracle::order_by_search(static_cast<i64>(p), m));
            ASSERT_EQ(t.e, 1u);
            ASSERT_EQ(t.e * t.f * t.r, oracle::phi(m));
        }
}

TEST(ArtinProperty, ArtinMapIsHomomorphism) {
    gen::Gen g(40);
    for (int i = 0; i < 1000; ++i) {
        const u64 m = g.int_in(3, 200);
        auto pick = [&] {
            for (;;) {
                Rational q(g.int_in(1, 10'000), g.int_in(1, 10'000));
                q.canonicalize();
                if (oracle::gcd(q.get_num().get_ui(), m) == 1 && oracle::gcd(q.get_den().get_ui(), m) == 1) return q;
            }
        };
        const Rational a = pick(), b = pick();
        const u64 fa = artin_map_q(a, m).value, fb = artin_map_q(b, m).value;
        ASSERT_EQ(artin_map_q(a * b, m).value, fa * fb % m) << a << " " << b << " " << m;
    }
}

TEST(ArtinProperty, XFourPlusOneNeverIrreducible) {
    PatternComputer pc(parse_polynomial("x^4+1"));
    for (u64 p : oracle::primes_upto(10'000)) {
        if (p == 2) continue;
        SplittingPattern s = pc.pattern(p);
        ASSERT_NE(s, (SplittingPattern{{4}})) << p;
        ASSERT_EQ(s == (SplittingPattern{{1, 1, 1, 1}}), p % 8 == 1) << p;
    }
}

TEST(ArtinProperty, PrimeDegreeIrreducibleModSomeP) {
    // Galois groups S3, S5, S7 and C3 all contain a full cycle.
    for (const char* text : {"x^3-2", "x^5-x-1", "x^7-x-1", "x^3-3x-1"}) {
        PatternComputer pc(parse_polynomial(text));
        const int n = pc.polynomial().degree();
        bool found = false;
        for (u64 p : oracle::primes_upto(10'000)) {
            if (pc.excluded(p)) continue;
            if (pc.pattern(p) == SplittingPattern{{n}}) {
                found = true;
                break;
            }
        }
        EXPECT_TRUE(found) << text;
    }
}

TEST(ArtinProperty, PatternDegreesSumToDegree) {
    gen::Gen g(41);
    for (int i = 0; i < 500; ++i) {
        std::vector<i64> c(g.int_in(2, 7), 0);
        for (auto& x : c) x = g.int_in(-20, 20);
        c.back() = g.nonzero_in(-3, 3);
        IntPolynomial f = make_polynomial(c);
        if (discriminant(f) == 0) continue;
        PatternComputer pc(f);
        for (int k = 0; k < 20; ++k) {
            const u64 p = g.prime_in(3, 100'000);
            if (pc.excluded(p)) continue;
            auto d = pc.pattern(p).degrees;
            ASSERT_EQ(std::accumulate(d.begin(), d.end(), 0), f.degree()) << to_string(f) << " " << p;
        }
    }
}
