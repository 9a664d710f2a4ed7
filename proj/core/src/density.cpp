#include "cft/density.hpp"

#include "cft/error.hpp"
#include "cft/ideals.hpp"
#include "cft/parallel.hpp"
#include "cft/quadfield.hpp"

#include <algorithm>
#include <cmath>

namespace cft {

namespace {

void check_bound(u64 X, const DensityOptions& options) {
    if (X < 2) throw DomainError("density sweep needs X >= 2");
    const u64 cap = std::min(options.cap, kDensityHardCap);
    if (X > cap) {
        throw LimitError("density bound X = " + std::to_string(X) + " exceeds the cap " + std::to_string(cap));
    }
}

// Runs visit(p, counters) over the primes of each block and returns the
// per-block counters in block order.
template <typename Counters, typename Visit>
std::vector<Counters> sweep(u64 X, const DensityOptions& options, Counters init, Visit&& visit) {
    return parallel_chunks<Counters>(2, X + 1, options.workers, [&](u64 lo, u64 hi) {
        Counters local = init;
        for_each_prime(lo, hi - 1, [&](u64 p) { visit(p, local); }, options.segment);
        return local;
    });
}

void finish(FrequencyReport& report) {
    report.max_abs_deviation = 0;
    for (auto& c : report.classes) {
        c.frequency = report.included == 0 ? 0.0 : static_cast<double>(c.count) / static_cast<double>(report.included);
        if (c.expected) report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(c.frequency - *c.expected));
    }
}

struct ExcludedCount {
    std::vector<u64> counts;
    std::vector<u64> excluded;
};

}  // namespace

FrequencyReport progression_density(u64 n, u64 X, const DensityOptions& options) {
    if (n < 3) throw DomainError("progression_density needs n >= 3");
    check_bound(X, options);
    const auto blocks = sweep(X, options, ExcludedCount{std::vector<u64>(n, 0), {}},
                              [n](u64 p, ExcludedCount& c) {
                                  if (n % p == 0) c.excluded.push_back(p);
                                  else ++c.counts[p % n];
                              });
    FrequencyReport report;
    report.bound = X;
    std::vector<u64> counts(n, 0);
    for (const auto& b : blocks) {
        for (u64 r = 0; r < n; ++r) counts[r] += b.counts[r];
        report.excluded_primes.insert(report.excluded_primes.end(), b.excluded.begin(), b.excluded.end());
    }
    const double expected = 1.0 / static_cast<double>(euler_phi(n));
    for (u64 r = 1; r < n; ++r) {
        if (gcd_u64(r, n) != 1) continue;
        report.classes.push_back({std::to_string(r) + " mod " + std::to_string(n), counts[r], 0, expected});
        report.included += counts[r];
    }
    report.excluded = report.excluded_primes.size();
    finish(report);
    return report;
}

FrequencyReport quadratic_split_density(i64 d_K, u64 X, const DensityOptions& options) {
    if (!is_fundamental_discriminant(d_K)) {
        throw DomainError("quadratic_split_density: " + std::to_string(d_K) + " is not a fundamental discriminant");
    }
    check_bound(X, options);
    const auto blocks = sweep(X, options, std::vector<u64>(3, 0), [d_K](u64 p, std::vector<u64>& c) {
        const int k = kronecker_symbol(d_K, static_cast<i64>(p));
        ++c[k == 1 ? 0 : (k == -1 ? 1 : 2)];
    });
    std::vector<u64> counts(3, 0);
    for (const auto& b : blocks) {
        for (int i = 0; i < 3; ++i) counts[i] += b[i];
    }
    FrequencyReport report;
    report.bound = X;
    report.classes = {{"split", counts[0], 0, 0.5}, {"inert", counts[1], 0, 0.5}, {"ramified", counts[2], 0, 0.0}};
    report.included = counts[0] + counts[1] + counts[2];
    finish(report);
    return report;
}

FrequencyReport poly_pattern_density(const IntPolynomial& f, u64 X, const std::map<SplittingPattern, double>& expected,
                                     const DensityOptions& options) {
    check_bound(X, options);
    const PatternComputer computer(f);
    struct Counts {
        std::map<SplittingPattern, u64> patterns;
        std::vector<u64> excluded;
    };
    const auto blocks = sweep(X, options, Counts{}, [&computer](u64 p, Counts& c) {
        if (computer.excluded(p)) c.excluded.push_back(p);
        else ++c.patterns[computer.pattern(p)];
    });
    std::map<SplittingPattern, u64> counts;
    for (const auto& [pattern, e] : expected) counts[pattern] = 0;
    FrequencyReport report;
    report.bound = X;
    for (const auto& b : blocks) {
        for (const auto& [pattern, k] : b.patterns) counts[pattern] += k;
        report.excluded_primes.insert(report.excluded_primes.end(), b.excluded.begin(), b.excluded.end());
    }
    for (const auto& [pattern, k] : counts) {
        FrequencyClass c{to_string(pattern), k, 0, std::nullopt};
        if (auto it = expected.find(pattern); it != expected.end()) c.expected = it->second;
        report.classes.push_back(c);
        report.included += k;
    }
    report.excluded = report.excluded_primes.size();
    finish(report);
    return report;
}

DirichletSumReport dirichlet_partial_sum(const PrimeSelector& selector, double s, u64 X, const DensityOptions& options) {
    if (!(s > 1.0 && s <= 1.5)) throw DomainError("dirichlet_partial_sum needs 1 < s <= 1.5");
    check_bound(X, options);
    DirichletSumReport report;
    report.s = s;
    report.bound = X;
    report.reference = -std::log(s - 1.0);
    std::vector<u64> marks{std::max<u64>(2, X / 8), std::max<u64>(2, X / 4), std::max<u64>(2, X / 2), X};
    struct Partial {
        long double sum = 0;
        u64 selected = 0;
    };
    long double running = 0;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        const u64 lo = i == 0 ? 2 : marks[i - 1] + 1;
        const u64 hi = marks[i];
        if (hi >= lo) {
            const auto blocks = parallel_chunks<Partial>(lo, hi + 1, options.workers, [&](u64 a, u64 b) {
                Partial part;
                for_each_prime(a, b - 1, [&](u64 p) {
                    if (selector(p)) {
                        part.sum += std::pow(static_cast<long double>(p), -static_cast<long double>(s));
                        ++part.selected;
                    }
                }, options.segment);
                return part;
            });
            for (const auto& b : blocks) {
                running += b.sum;
                report.selected += b.selected;
            }
        }
        report.checkpoints.emplace_back(hi, static_cast<double>(running));
    }
    report.partial_sum = static_cast<double>(running);
    report.ratio = report.partial_sum / report.reference;
    return report;
}

SlopeReport ideal_count_slope(i64 d_K, u64 X, const DensityOptions& options) {
    if (X < 1) throw DomainError("ideal_count_slope needs X >= 1");
    EnumerationOptions enumeration;
    enumeration.workers = options.workers;
    const std::vector<u64> counts = count_ideals_by_class(d_K, X, enumeration);
    const ClassNumberResult classes = class_number_neg(d_K);
    SlopeReport report;
    report.discriminant = d_K;
    report.bound = X;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double slope = static_cast<double>(counts[i]) / static_cast<double>(X);
        report.classes.push_back({i, classes.forms[i], counts[i], slope});
        report.total += counts[i];
    }
    report.total_slope = static_cast<double>(report.total) / static_cast<double>(X);
    for (const auto& a : report.classes) {
        for (const auto& b : report.classes) {
            const double hi = std::max(a.slope, b.slope);
            if (hi > 0) report.max_relative_spread = std::max(report.max_relative_spread, std::abs(a.slope - b.slope) / hi);
        }
    }
    return report;
}

}  // namespace cft
