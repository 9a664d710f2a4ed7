#pragma once

// Empirical densities over sieved primes and ideal-count slopes.
//
// Every sweep splits [2, X] into a fixed number of blocks and merges the
// per-block counters in block order, so reports do not depend on the worker
// count.

#include "cft/arith.hpp"
#include "cft/artin.hpp"
#include "cft/forms.hpp"
#include "cft/polynomial.hpp"
#include "cft/sieve.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cft {

inline constexpr u64 kDensityHardCap = 100'000'000;

struct DensityOptions {
    unsigned workers = 1;
    u64 segment = kDefaultSegment;
    u64 cap = kDensityHardCap;
};

struct FrequencyClass {
    std::string label;
    u64 count = 0;
    double frequency = 0;
    std::optional<double> expected;
};

struct FrequencyReport {
    u64 bound = 0;
    std::vector<FrequencyClass> classes;
    /// Primes counted in the classes.
    u64 included = 0;
    /// Primes outside the statement (dividing the modulus or disc(f)).
    u64 excluded = 0;
    std::vector<u64> excluded_primes;
    /// max |frequency - expected| over classes with an expectation.
    double max_abs_deviation = 0;
};

/// Primes p <= X with p coprime to n, bucketed by p mod n; expected 1/phi(n).
FrequencyReport progression_density(u64 n, u64 X, const DensityOptions& options = {});

/// Split / inert / ramified frequencies; expected 1/2, 1/2, 0.
FrequencyReport quadratic_split_density(i64 d_K, u64 X, const DensityOptions& options = {});

/// Splitting-pattern frequencies of f mod p. Patterns in `expected` are
/// reported even when they never occur.
FrequencyReport poly_pattern_density(const IntPolynomial& f, u64 X,
                                     const std::map<SplittingPattern, double>& expected = {},
                                     const DensityOptions& options = {});

struct DirichletSumReport {
    double s = 0;
    u64 bound = 0;
    u64 selected = 0;
    /// Partial sums at X/8, X/4, X/2, X (monotone in X).
    std::vector<std::pair<u64, double>> checkpoints;
    double partial_sum = 0;
    /// -log(s - 1)
    double reference = 0;
    double ratio = 0;
};

using PrimeSelector = std::function<bool(u64)>;

/// Sum of p^-s over selected primes p <= X; requires 1 < s <= 1.5.
DirichletSumReport dirichlet_partial_sum(const PrimeSelector& selector, double s, u64 X,
                                         const DensityOptions& options = {});

struct ClassSlope {
    std::size_t class_index = 0;
    BinaryQuadraticForm form;
    u64 count = 0;
    double slope = 0;
};

struct SlopeReport {
    i64 discriminant = 0;
    u64 bound = 0;
    std::vector<ClassSlope> classes;
    u64 total = 0;
    double total_slope = 0;
    /// max over class pairs of |s_i - s_j| / max(s_i, s_j).
    double max_relative_spread = 0;
};

/// j(X, K)/X for every ideal class of d_K < 0.
SlopeReport ideal_count_slope(i64 d_K, u64 X, const DensityOptions& options = {});

}  // namespace cft
