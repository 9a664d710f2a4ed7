#include "cft/arith.hpp"
#include "cft/forms.hpp"
#include "gen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cft;

TEST(FormsProperty, ReduceIdempotentAndPreservesDiscriminant) {
    gen::Gen g(70);
    int done = 0;
    while (done < 1000) {
        BinaryQuadraticForm f{g.int_in(1, 2000), g.int_in(-4000, 4000), g.int_in(1, 2000)};
        if (f.discriminant() >= 0) continue;
        Reduction r = reduce_form_with_transform(f);
        ASSERT_TRUE(r.form.is_reduced()) << to_string(f);
        ASSERT_EQ(r.form.discriminant(), f.discriminant());
        ASSERT_EQ(reduce_form(r.form), r.form);
        ASSERT_EQ(apply(f, r.transform), r.form);
        ASSERT_EQ(r.transform.p * r.transform.s - r.transform.q * r.transform.r, 1);
        ++done;
    }
}

TEST(FormsProperty, ClassNumberOneList) {
    for (i64 D : {-3, -4, -7, -8, -11, -19, -43, -67, -163}) {
        EXPECT_EQ(class_number_neg(D).h, 1) << D;
        EXPECT_EQ(oracle::reduced_forms(D).size(), 1u) << D;
    }
}

TEST(FormsProperty, MinusFiftySixCriterion) {
    CriterionChecker checker(-56, parse_polynomial("x^4+2x^2-7"));
    u64 represented = 0, checked = 0;
    for (u64 p : oracle::primes_upto(100'000)) {
        if (p == 2 || p == 7) continue;
        CriterionResult r = checker.check(p);
        const bool root = [&] {
            for (u64 x = 0; x < p; ++x)
                if ((((x * x % p + 2) * x % p) * x % p + p - 7 % p) % p == 0) return true;
            return false;
        }();
        const bool by_criterion = oracle::legendre(-56, p) == 1 && root;
        ASSERT_EQ(r.represented, by_criterion) << p;
        ASSERT_TRUE(r.agree) << p;
        if (r.represented) {
            ASSERT_TRUE(r.witness);
            ASSERT_EQ(r.witness->x * r.witness->x + 14 * r.witness->y * r.witness->y, static_cast<i64>(p));
        }
        represented += r.represented;
        ++checked;
    }
    EXPECT_GE(represented, 1000u);
    EXPECT_GT(checked, 9000u);
}

TEST(FormsProperty, ClassNumberOneCriterion) {
    for (i64 D : {-4, -8, -3, -7}) {
        for (u64 p : oracle::primes_upto(100'000)) {
            if ((2 * -D) % static_cast<i64>(p) == 0) continue;
            const bool represented = represent_prime(p, D).has_value();
            ASSERT_EQ(represented, oracle::legendre(D, p) == 1) << D << " " << p;
        }
    }
}
