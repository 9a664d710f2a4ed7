#include "cft/error.hpp"
#include "cft/forms.hpp"
#include "cft/ideals.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

using namespace cft;

namespace {

// (O/I)* by testing, for every residue x + y w, whether alpha O + I = O,
// i.e. whether the Z-span of a, b + c w, alpha, alpha w has index 1
// (gcd of the 2x2 minors).
i64 residue_units_by_minors(const QuadIdeal& I) {
    const i64 D = I.order().D(), n0 = (D * D - D) / 4;
    i64 count = 0;
    for (i64 y = 0; y < I.c(); ++y)
        for (i64 x = 0; x < I.a(); ++x) {
            const i64 cols[4][2] = {{I.a(), 0}, {I.b(), I.c()}, {x, y}, {-y * n0, x + y * D}};
            i64 g = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) g = std::gcd(g, cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0]);
            count += g == 1;
        }
    return count;
}

}  // namespace

TEST(DecomposePrime, Examples) {
    auto split = decompose_prime(5, -4);
    EXPECT_EQ(split.type.kind, SplittingKind::Split);
    ASSERT_EQ(split.primes.size(), 2u);
    EXPECT_EQ(split.primes[0].norm(), 5);
    EXPECT_EQ(split.primes[1], conjugate(split.primes[0]));
    EXPECT_NE(split.primes[0], split.primes[1]);

    auto ram = decompose_prime(2, -4);
    EXPECT_EQ(ram.type.kind, SplittingKind::Ramified);
    EXPECT_EQ((std::array{ram.type.e, ram.type.f, ram.type.r}), (std::array{2, 1, 1}));

    auto inert = decompose_prime(3, -4);
    EXPECT_EQ(inert.type.kind, SplittingKind::Inert);
    ASSERT_EQ(inert.primes.size(), 1u);
    EXPECT_EQ(inert.primes[0].norm(), 9);

    EXPECT_THROW(decompose_prime(9, -4), DomainError);
    EXPECT_THROW(decompose_prime(5, -12), DomainError);  // not fundamental
}

TEST(IdealMul, Examples) {
    QuadOrder o(-4);
    auto p5 = decompose_prime(5, -4).primes;
    EXPECT_EQ(ideal_mul(p5[0], unit_ideal(o)), p5[0]);
    EXPECT_EQ(ideal_mul(p5[0], p5[1]), QuadIdeal(o, 5, 0, 5));
    QuadIdeal p2 = decompose_prime(2, -4).primes[0];
    EXPECT_EQ(ideal_pow(p2, 2), QuadIdeal(o, 2, 0, 2));
    // (1 + i) = (2 + w) since w = -2 + i
    EXPECT_EQ(p2, principal_ideal(QuadElement(o, 3, 1)));
}

TEST(IdealMul, MismatchedOrdersRejected) {
    QuadIdeal a = unit_ideal(QuadOrder(-4)), b = unit_ideal(QuadOrder(-8));
    EXPECT_THROW(ideal_mul(a, b), DomainError);
}

TEST(IdealNorm, Examples) {
    QuadOrder o(-56);
    EXPECT_EQ(ideal_norm(unit_ideal(o)), 1);
    for (i64 n = 1; n < 30; ++n) EXPECT_EQ(ideal_norm(principal_ideal(QuadElement::from_integer(o, n))), n * n);
    EXPECT_EQ(ideal_norm(decompose_prime(5, -4).primes[0]), 5);
}

TEST(QuadIdeal, HnfValidation) {
    QuadOrder o(-56);
    EXPECT_THROW(QuadIdeal(o, 3, 1, 1), DomainError);  // not closed under w
    EXPECT_THROW(QuadIdeal(o, 4, 1, 2), DomainError);  // c does not divide b
    EXPECT_THROW(QuadIdeal(o, 3, 3, 1), DomainError);  // b out of range
    EXPECT_NO_THROW(QuadIdeal(o, 3, 0, 1));
    EXPECT_EQ(to_string(QuadIdeal(o, 3, 0, 1)), "[3, 0 + 1*w]");
}

TEST(ResidueUnits, Examples) {
    QuadOrder o(-4);
    EXPECT_EQ(residue_unit_count(unit_ideal(o)), 1);
    EXPECT_EQ(residue_unit_count(QuadIdeal(o, 2, 0, 2)), 2);
    EXPECT_EQ(residue_unit_count(decompose_prime(5, -4).primes[0]), 4);
    EXPECT_EQ(residue_units_by_minors(QuadIdeal(o, 2, 0, 2)), 2);
}

TEST(Principal, Examples) {
    QuadOrder o(-4);
    auto seven = is_principal_imaginary(QuadIdeal(o, 7, 0, 7));
    ASSERT_TRUE(seven);
    EXPECT_EQ(seven->norm(), 49);
    EXPECT_EQ(principal_ideal(*seven), QuadIdeal(o, 7, 0, 7));

    QuadIdeal p5 = decompose_prime(5, -4).primes[0];
    auto g = is_principal_imaginary(p5);
    ASSERT_TRUE(g);
    EXPECT_EQ(g->norm(), 5);
    EXPECT_EQ(principal_ideal(*g), p5);

    QuadIdeal p3 = decompose_prime(3, -56).primes[0];
    EXPECT_FALSE(is_principal_imaginary(p3));
    EXPECT_THROW(is_principal_imaginary(unit_ideal(QuadOrder(8))), DomainError);
}

TEST(Enumerate, Examples) {
    auto one = enumerate_ideals_up_to_norm(-4, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].ideal, unit_ideal(QuadOrder(-4)));

    auto five = enumerate_ideals_up_to_norm(-4, 5);
    std::vector<i64> norms;
    for (const auto& e : five) norms.push_back(e.ideal.norm());
    EXPECT_EQ(norms, (std::vector<i64>{1, 2, 4, 5, 5}));

    const double ratio = static_cast<double>(enumerate_ideals_up_to_norm(-4, 10'000).size()) / 10'000;
    EXPECT_GE(ratio, 0.76);
    EXPECT_LE(ratio, 0.81);
}

TEST(Enumerate, TotalsMatchDivisorSumOracle) {
    for (i64 d : {-3, -4, -7, -8, -15, -56, -84}) {
        for (u64 X : {1u, 2u, 10u, 99u, 1000u, 5000u}) {
            auto entries = enumerate_ideals_up_to_norm(d, X);
            EXPECT_EQ(entries.size(), oracle::ideal_count_upto(d, X)) << d << " X=" << X;
        }
    }
}

TEST(Enumerate, ClassCountsMatchLatticePoints) {
    // Ideals of norm <= X in the class of f correspond to the w-orbits of
    // nonzero (x, y) with f(x, y) <= X; f and its inverse give equal counts.
    for (i64 d : {-56, -84, -23, -4}) {
        const u64 X = 20'000;
        ClassNumberResult classes = class_number_neg(d);
        std::vector<u64> counts = count_ideals_by_class(d, X);
        ASSERT_EQ(counts.size(), static_cast<std::size_t>(classes.h));
        const u64 w = d == -4 ? 4 : (d == -3 ? 6 : 2);
        for (std::size_t i = 0; i < classes.forms.size(); ++i) {
            const auto& f = classes.forms[i];
            EXPECT_EQ(counts[i], oracle::form_points_upto(f.a, f.b, f.c, X) / w) << d << " class " << i;
        }
    }
}

TEST(Enumerate, LabelsAgreeWithCounts) {
    auto entries = enumerate_ideals_up_to_norm(-56, 3000);
    std::vector<u64> tally(4, 0);
    for (const auto& e : entries) ++tally[e.class_index];
    EXPECT_EQ(tally, count_ideals_by_class(-56, 3000));
    for (const auto& e : entries) {
        const bool principal = is_principal_imaginary(e.ideal).has_value();
        EXPECT_EQ(principal, e.class_index == 0) << to_string(e.ideal);
    }
}

TEST(Enumerate, WorkerCountDoesNotChangeOutput) {
    EnumerationOptions one, four;
    four.workers = 4;
    auto a = enumerate_ideals_up_to_norm(-56, 20'000, one);
    auto b = enumerate_ideals_up_to_norm(-56, 20'000, four);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_EQ(a[i].ideal, b[i].ideal);
        ASSERT_EQ(a[i].class_index, b[i].class_index);
    }
}

TEST(Enumerate, CapEnforcedAndRealFieldsRejected) {
    EnumerationOptions small;
    small.cap = 100;
    EXPECT_THROW(enumerate_ideals_up_to_norm(-4, 101, small), LimitError);
    EXPECT_THROW(enumerate_ideals_up_to_norm(8, 10), DomainError);
}

TEST(Enumerate, Tsv) {
    std::ostringstream out;
    write_ideals_tsv(out, enumerate_ideals_up_to_norm(-4, 2));
    EXPECT_EQ(out.str(), "norm\ta\tb\tc\tclass\n1\t1\t0\t1\t0\n2\t2\t1\t1\t0\n");
}
