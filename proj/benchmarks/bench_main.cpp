#include "cft/artin.hpp"
#include "cft/density.hpp"
#include "cft/forms.hpp"
#include "cft/intmatrix.hpp"
#include "cft/padic.hpp"
#include "cft/sieve.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cft;

static void BM_SievePrimes(benchmark::State& state) {
    const u64 hi = static_cast<u64>(state.range(0));
    for (auto _ : state) {
        u64 count = 0;
        for_each_prime(2, hi, [&](u64) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SievePrimes)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_ProgressionDensity(benchmark::State& state) {
    DensityOptions options;
    options.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(progression_density(12, 10'000'000, options));
}
BENCHMARK(BM_ProgressionDensity)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

// Distinct-degree factorization through the pattern computer.
static void BM_SplittingPattern(benchmark::State& state) {
    PatternComputer pc(parse_polynomial(state.range(0) == 4 ? "x^4+2x^2-7" : "x^7-x-1"));
    const std::vector<u64> primes = sieve_primes(3, 20'000);
    for (auto _ : state)
        for (u64 p : primes)
            if (!pc.excluded(p)) benchmark::DoNotOptimize(pc.pattern(p));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(primes.size()));
}
BENCHMARK(BM_SplittingPattern)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_ReduceForm(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<i64> coef(1, 1'000'000);
    std::vector<BinaryQuadraticForm> forms;
    while (forms.size() < 1024) {
        BinaryQuadraticForm f{coef(rng), coef(rng) - 500'000, coef(rng)};
        if (f.discriminant() < 0) forms.push_back(f);
    }
    for (auto _ : state)
        for (const auto& f : forms) benchmark::DoNotOptimize(reduce_form(f));
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_ReduceForm);

static void BM_ClassNumber(benchmark::State& state) {
    const i64 D = -state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(class_number_neg(D));
}
BENCHMARK(BM_ClassNumber)->Arg(56)->Arg(100'004)->Arg(1'000'004);

static void BM_PadicExp(benchmark::State& state) {
    const int prec = static_cast<int>(state.range(0));
    const PadicNumber x = PadicNumber::from_parts(5, 1, BigInt(1234), prec);
    for (auto _ : state) benchmark::DoNotOptimize(padic_exp(x));
}
BENCHMARK(BM_PadicExp)->Arg(20)->Arg(100)->Arg(400);

static void BM_PadicLog(benchmark::State& state) {
    const int prec = static_cast<int>(state.range(0));
    const PadicNumber u = PadicNumber::from_parts(7, 0, BigInt(1 + 7 * 31), prec);
    for (auto _ : state) benchmark::DoNotOptimize(padic_log(u));
}
BENCHMARK(BM_PadicLog)->Arg(20)->Arg(100)->Arg(400);

static void BM_SmithInvariants(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> entry(-50, 50);
    std::vector<long> values(n * n);
    for (auto& v : values) v = entry(rng);
    const IntMatrix m = IntMatrix::from_row_major(n, n, values);
    for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(BM_SmithInvariants)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
