#include "cft/arith.hpp"
#include "cft/error.hpp"
#include "cft/sieve.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cft;

TEST(Factorize, Examples) {
    EXPECT_EQ(factorize(1), (FactoredInteger{1, {}}));
    EXPECT_EQ(factorize(-56), (FactoredInteger{-1, {{2, 3}, {7, 1}}}));
    EXPECT_EQ(factorize(9999999967), (FactoredInteger{1, {{9999999967, 1}}}));
    EXPECT_THROW(factorize(0), DomainError);
}

TEST(Factorize, AgreesWithTrialDivision) {
    for (i64 n = -3000; n <= 3000; n += 7) {
        if (n == 0) continue;
        FactoredInteger f = factorize(n);
        auto ref = oracle::trial_factor(n);
        ASSERT_EQ(f.factors.size(), ref.size()) << n;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            EXPECT_EQ(f.factors[i].prime, ref[i].first);
            EXPECT_EQ(f.factors[i].exponent, ref[i].second);
        }
        EXPECT_EQ(f.value(), n);
    }
    // Pollard rho territory: two primes above the trial-division bound.
    const i64 n = 1000003LL * 1000033LL;
    EXPECT_EQ(factorize(n), (FactoredInteger{1, {{1000003, 1}, {1000033, 1}}}));
}

TEST(Crt, Examples) {
    std::vector<Congruence> one{{2, 3}};
    EXPECT_EQ(crt(one), (ResidueClass{3, 2}));
    std::vector<Congruence> two{{2, 3}, {3, 5}};
    EXPECT_EQ(crt(two), (ResidueClass{15, 8}));
    std::vector<Congruence> ones{{1, 4}, {1, 9}, {1, 25}};
    EXPECT_EQ(crt(ones), (ResidueClass{900, 1}));
    std::vector<Congruence> clash{{1, 4}, {3, 6}};
    EXPECT_THROW(crt(clash), DomainError);
}

TEST(Kronecker, Examples) {
    EXPECT_EQ(kronecker_symbol(2, 7), 1);
    EXPECT_EQ(kronecker_symbol(-14, 23), 1);
    for (i64 n : {1, -1, 2, 15, -15, 97}) EXPECT_EQ(kronecker_symbol(1, n), 1);
    EXPECT_EQ(kronecker_symbol(5, -1), 1);
    EXPECT_THROW(kronecker_symbol(3, 0), DomainError);
}

TEST(Kronecker, TwoAdicAndSignConventions) {
    // (a/2) by a mod 8; (a/-1) = +1 for every a.
    EXPECT_EQ(kronecker_symbol(1, 2), 1);
    EXPECT_EQ(kronecker_symbol(3, 2), -1);
    EXPECT_EQ(kronecker_symbol(5, 2), -1);
    EXPECT_EQ(kronecker_symbol(7, 2), 1);
    EXPECT_EQ(kronecker_symbol(4, 2), 0);
    EXPECT_EQ(kronecker_symbol(-3, -1), 1);
    for (i64 a = -60; a <= 60; ++a)
        for (u64 n = 1; n < 120; ++n)
            ASSERT_EQ(kronecker_symbol(a, static_cast<i64>(n)), oracle::kronecker_naive(a, n)) << a << " " << n;
}

TEST(SqrtModP, Examples) {
    EXPECT_EQ(sqrt_mod_p(0, 5), std::optional<u64>(0));
    EXPECT_EQ(sqrt_mod_p(2, 7), std::optional<u64>(3));
    EXPECT_EQ(sqrt_mod_p(3, 7), std::nullopt);
    EXPECT_THROW(sqrt_mod_p(2, 9), DomainError);
}

TEST(SqrtModP, AbsentExactlyForNonResidues) {
    for (u64 p : oracle::primes_upto(400)) {
        if (p == 2) continue;
        for (i64 a = 0; a < static_cast<i64>(p); ++a) {
            auto r = sqrt_mod_p(a, p);
            ASSERT_EQ(r.has_value(), oracle::legendre(a, p) != -1) << a << " mod " << p;
            if (r) {
                EXPECT_EQ(*r * *r % p, static_cast<u64>(a));
                EXPECT_LE(*r, p - *r);
            }
        }
    }
}

TEST(Order, Examples) {
    EXPECT_EQ(multiplicative_order(1, 12), 1u);
    EXPECT_EQ(multiplicative_order(3, 8), 2u);
    EXPECT_EQ(multiplicative_order(7, 12), 2u);
    EXPECT_THROW(multiplicative_order(2, 12), DomainError);
}

TEST(Order, MatchesSearchAndDividesPhi) {
    for (u64 n = 2; n < 200; ++n)
        for (i64 a = 1; a < static_cast<i64>(n); ++a) {
            if (oracle::gcd(static_cast<u64>(a), n) != 1) continue;
            const u64 k = multiplicative_order(a, n);
            ASSERT_EQ(k, oracle::order_by_search(a, n));
            EXPECT_EQ(euler_phi(n) % k, 0u);
        }
}

TEST(Sieve, Examples) {
    EXPECT_EQ(sieve_primes(2, 10), (std::vector<u64>{2, 3, 5, 7}));
    EXPECT_EQ(sieve_primes(1'000'000, 1'000'100),
              (std::vector<u64>{1000003, 1000033, 1000037, 1000039, 1000081, 1000099}));
    EXPECT_EQ(sieve_primes(5, 5), (std::vector<u64>{5}));
    EXPECT_THROW(sieve_primes(10, 2), DomainError);
}

TEST(Sieve, WindowsMatchEratosthenes) {
    const auto ref = oracle::primes_upto(100'000);
    EXPECT_EQ(sieve_primes(2, 100'000), ref);
    EXPECT_EQ(sieve_primes(2, 100'000, 64), ref);  // tiny segments exercise the seams
    for (u64 lo : {2u, 3u, 97u, 1000u, 65535u}) {
        std::vector<u64> expect;
        for (u64 p : ref)
            if (p >= lo && p <= 70'000) expect.push_back(p);
        EXPECT_EQ(sieve_primes(lo, 70'000, 1000), expect) << lo;
    }
}

TEST(Primality, MatchesTrialDivisionAndKnownPrimes) {
    for (u64 n = 0; n < 20'000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
    EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest prime below 2^64
    EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Phi, MatchesCount) {
    for (u64 n = 1; n < 500; ++n) ASSERT_EQ(euler_phi(n), oracle::phi(n)) << n;
}
