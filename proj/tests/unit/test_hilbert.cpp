#include "cft/error.hpp"
#include "cft/hilbert.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace cft;

namespace {

const std::vector<u64> kPrimes{2, 3, 5, 7, 13};

std::map<std::string, int> as_map(const HilbertProduct& hp) {
    std::map<std::string, int> out;
    for (const auto& [v, s] : hp.symbols) out[to_string(v)] = s;
    return out;
}

}  // namespace

TEST(Place, Parse) {
    EXPECT_EQ(parse_place("inf"), kInfinity);
    EXPECT_EQ(parse_place("oo"), kInfinity);
    EXPECT_EQ(parse_place("13"), Place{13});
    EXPECT_THROW(parse_place("12"), DomainError);
    EXPECT_EQ(to_string(kInfinity), "inf");
}

TEST(Hilbert, Examples) {
    for (i64 a : {1, 2, -3, 6, 10, -14})
        for (u64 p : kPrimes) EXPECT_EQ(hilbert_symbol(Rational(a), Rational(-a), Place{p}), 1);
    EXPECT_EQ(hilbert_symbol(Rational(-1), Rational(-1), kInfinity), -1);
    EXPECT_EQ(hilbert_symbol(Rational(2), Rational(3), Place{3}), -1);
    EXPECT_THROW(hilbert_symbol(Rational(0), Rational(3), Place{3}), DomainError);
}

TEST(HilbertProduct, Examples) {
    for (const auto& [place, s] : as_map(hilbert_product(Rational(1), Rational(-7)))) EXPECT_EQ(s, 1) << place;
    auto two_three = hilbert_product(Rational(2), Rational(3));
    EXPECT_EQ(as_map(two_three), (std::map<std::string, int>{{"2", -1}, {"3", -1}, {"inf", 1}}));
    EXPECT_EQ(two_three.product, 1);
    auto mm = hilbert_product(Rational(-1), Rational(-1));
    EXPECT_EQ(as_map(mm), (std::map<std::string, int>{{"2", -1}, {"inf", -1}}));
    EXPECT_EQ(mm.symbols.back().first, kInfinity);
}

TEST(Hilbert, FormulaMatchesNormGroupOracle) {
    for (u64 p : kPrimes) {
        const auto reps = square_class_representatives(Place{p});
        for (i64 a : reps)
            for (i64 b : reps)
                ASSERT_EQ(hilbert_symbol(Rational(a), Rational(b), Place{p}), oracle::hilbert_by_norms(a, b, p))
                    << "(" << a << ", " << b << ")_" << p;
    }
}

TEST(Hilbert, SearchMatchesNormGroupOracle) {
    for (u64 p : kPrimes) {
        const auto reps = square_class_representatives(Place{p});
        for (i64 a : reps)
            for (i64 b : reps)
                ASSERT_EQ(hilbert_symbol_search(Rational(a), Rational(b), p), oracle::hilbert_by_norms(a, b, p))
                    << "(" << a << ", " << b << ")_" << p;
    }
}

TEST(Hilbert, SquareClassRepresentatives) {
    EXPECT_EQ(square_class_representatives(Place{2}), (std::vector<i64>{1, 3, 5, 7, 2, 6, 10, 14}));
    EXPECT_EQ(square_class_representatives(kInfinity), (std::vector<i64>{1, -1}));
    EXPECT_EQ(square_class_representatives(Place{7}), (std::vector<i64>{1, 3, 7, 21}));
    // The representatives are pairwise inequivalent.
    for (u64 p : kPrimes) {
        std::set<std::pair<int, int>> classes;
        for (i64 a : square_class_representatives(Place{p})) classes.insert(oracle::square_class(mpq_class(a), p));
        EXPECT_EQ(classes.size(), p == 2 ? 8u : 4u);
    }
}
