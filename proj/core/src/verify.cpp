#include "cft/verify.hpp"

#include "cft/artin.hpp"
#include "cft/cohomology.hpp"
#include "cft/density.hpp"
#include "cft/error.hpp"
#include "cft/forms.hpp"
#include "cft/hilbert.hpp"
#include "cft/ideals.hpp"
#include "cft/padic.hpp"
#include "cft/rayclass.hpp"
#include "cft/sieve.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace cft {

namespace {

bool quick(const VerifyOptions& o) { return o.profile == Profile::Quick; }

u64 bound(const VerifyOptions& o, u64 full) {
    if (o.limit) return *o.limit;
    return quick(o) ? std::max<u64>(full / 10, 2) : full;
}

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << x;
    return out.str();
}

// 1. (p/q)(q/p) = (-1)^((p-1)/2 (q-1)/2) for odd primes p < q < limit.
CheckResult reciprocity(const VerifyOptions& o) {
    CheckResult r;
    r.time_limit_ms = 1000;
    const u64 limit = bound(o, 500);
    const auto primes = small_primes(limit - 1);
    u64 pairs = 0, failures = 0;
    std::string first_failure;
    for (std::size_t i = 1; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            const i64 p = static_cast<i64>(primes[i]), q = static_cast<i64>(primes[j]);
            const int lhs = kronecker_symbol(p, q) * kronecker_symbol(q, p);
            const int rhs = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
            ++pairs;
            if (lhs != rhs) {
                if (failures++ == 0) first_failure = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
            }
        }
    }
    r.pass = failures == 0;
    r.detail = std::to_string(pairs) + " pairs of odd primes below " + std::to_string(limit) + ", " +
               std::to_string(failures) + " failures" + (failures ? ", first " + first_failure : "");
    return r;
}

// 2. x^4 + 1 is never irreducible mod p and splits completely iff p = 1 mod 8.
CheckResult x4plus1(const VerifyOptions& o) {
    CheckResult r;
    r.time_limit_ms = 5000;
    const u64 limit = bound(o, 10'000);
    const PatternComputer f(make_polynomial({1, 0, 0, 0, 1}));
    const SplittingPattern irreducible{{4}}, split{{1, 1, 1, 1}};
    u64 primes = 0, failures = 0;
    std::string first_failure;
    for_each_prime(3, limit - 1, [&](u64 p) {
        const SplittingPattern pat = f.pattern(p);
        const bool ok = pat != irreducible && ((pat == split) == (p % 8 == 1));
        ++primes;
        if (!ok && failures++ == 0) first_failure = std::to_string(p) + " -> " + to_string(pat);
    });
    r.pass = failures == 0;
    r.detail = std::to_string(primes) + " primes 2 < p < " + std::to_string(limit) + ", " + std::to_string(failures) +
               " failures" + (failures ? ", first " + first_failure : "");
    return r;
}

// 3. p = x^2 + 14y^2 iff (-56/p) = 1 and g has a root mod p.
CheckResult x2plus14y2(const VerifyOptions& o) {
    CheckResult r;
    r.time_limit_ms = 30'000;
    const u64 limit = bound(o, 100'000);
    u64 primes = 0, represented = 0, disagreements = 0;
    std::string first;
    for_each_prime(3, limit - 1, [&](u64 p) {
        if (p == 7) return;
        ++primes;
        const bool rep = represent_prime(p, -56).has_value();
        const bool crit = kronecker_symbol(-56, static_cast<i64>(p)) == 1 && fp::has_root(fp::reduce(o.g_d56, p), p);
        if (rep) ++represented;
        if (rep != crit && disagreements++ == 0) first = std::to_string(p);
    });
    r.pass = disagreements == 0;
    r.detail = std::to_string(primes) + " primes below " + std::to_string(limit) + " with g = " + to_string(o.g_d56) +
               ", " + std::to_string(represented) + " represented, " + std::to_string(disagreements) +
               " disagreements" + (disagreements ? ", first p = " + first : "");
    return r;
}

// 4. h_{(m) inf} = phi(m) over Q, with a brute-force cross-check for m <= 50.
CheckResult rayclass_q(const VerifyOptions& o) {
    CheckResult r;
    const u64 limit = bound(o, 1000);
    u64 failures = 0, brute_failures = 0;
    std::string first;
    for (u64 m = 3; m <= limit; ++m) {
        const Modulus mod = rational_modulus(static_cast<i64>(m), true);
        const RayClassReport rep = ray_class_number(mod);
        if (rep.h_m != static_cast<i64>(euler_phi(m)) && failures++ == 0) first = "m = " + std::to_string(m);
        if (m <= 50 && ray_class_count_bruteforce_q(mod) != rep.h_m && brute_failures++ == 0) {
            first = "brute force at m = " + std::to_string(m);
        }
    }
    r.pass = failures == 0 && brute_failures == 0;
    r.detail = "3 <= m <= " + std::to_string(limit) + ": " + std::to_string(failures) + " formula failures, " +
               std::to_string(brute_failures) + " brute-force mismatches (m <= 50)" + (r.pass ? "" : ", first " + first);
    return r;
}

// 5. Hilbert reciprocity and formula vs search on square classes.
CheckResult hilbert(const VerifyOptions& o) {
    CheckResult r;
    const i64 limit = static_cast<i64>(o.limit.value_or(50));
    u64 pairs = 0, product_failures = 0, oracle_checks = 0, oracle_failures = 0;
    std::string first;
    for (i64 a = -limit; a <= limit; ++a) {
        if (a == 0) continue;
        for (i64 b = -limit; b <= limit; ++b) {
            if (b == 0) continue;
            ++pairs;
            if (hilbert_product(Rational(from_i64(a)), Rational(from_i64(b))).product != 1 && product_failures++ == 0) {
                first = "product at (" + std::to_string(a) + "," + std::to_string(b) + ")";
            }
        }
    }
    for (u64 p : {2, 3, 5, 7, 13}) {
        const auto reps = square_class_representatives(Place{p});
        for (i64 a : reps) {
            for (i64 b : reps) {
                const Rational qa(from_i64(a)), qb(from_i64(b));
                ++oracle_checks;
                if (hilbert_symbol(qa, qb, Place{p}) != hilbert_symbol_search(qa, qb, p) && oracle_failures++ == 0) {
                    first = "oracle at (" + std::to_string(a) + "," + std::to_string(b) + ")_" + std::to_string(p);
                }
            }
        }
    }
    r.pass = product_failures == 0 && oracle_failures == 0;
    r.detail = std::to_string(pairs) + " pairs with 0 < |a|,|b| <= " + std::to_string(limit) + ": " +
               std::to_string(product_failures) + " product failures; " + std::to_string(oracle_checks) +
               " square-class symbols vs search: " + std::to_string(oracle_failures) + " mismatches" +
               (r.pass ? "" : ", first " + first);
    return r;
}

// 6. exp/log round trips, valuation identities, domain rejection.
CheckResult padic(const VerifyOptions& o) {
    CheckResult r;
    const u64 samples = bound(o, 1000);
    constexpr int N = 20;
    std::mt19937_64 rng(o.seed);
    u64 checks = 0, failures = 0;
    std::string first;
    auto fail = [&](const std::string& what) {
        if (failures++ == 0) first = what;
    };
    for (u64 p : {2, 3, 5, 7}) {
        const BigInt pN = prime_power(p, N);
        gmp_randclass gen(gmp_randinit_default);
        gen.seed(static_cast<unsigned long>(rng()));
        auto random_unit = [&] {
            for (;;) {
                const BigInt u = gen.get_z_range(pN);
                if (u % p != 0) return u;
            }
        };
        const int vmin = p == 2 ? 2 : 1;
        std::uniform_int_distribution<int> vdist(vmin, vmin + 4);
        for (u64 i = 0; i < samples; ++i) {
            ++checks;
            const PadicNumber x = PadicNumber::from_parts(p, vdist(rng), random_unit(), N);
            const PadicNumber ex = padic_exp(x);
            const PadicNumber back = padic_log(ex);
            if (back.is_zero() || back.valuation() != x.valuation() || back.precision() < N ||
                !back.agrees_with(x)) {
                fail("log(exp(x)) at p = " + std::to_string(p) + ", x = " + to_string(x));
            }
            const PadicNumber one = PadicNumber::from_parts(p, 0, 1, ex.absolute_precision());
            const PadicNumber em1 = ex - one;
            if (em1.is_zero() || em1.valuation() != x.valuation()) fail("v(exp(x) - 1) at p = " + std::to_string(p));
            const PadicNumber lg = padic_log(one + x);
            if (lg.is_zero() || lg.valuation() != x.valuation()) fail("v(log(1 + x)) at p = " + std::to_string(p));

            // u = 1 mod p (mod 4 when p = 2)
            const BigInt step = p == 2 ? BigInt(4) : from_u64(p);
            BigInt u = 1 + step * gen.get_z_range(pN);
            const PadicNumber pu = PadicNumber::from_parts(p, 0, u, N);
            const PadicNumber round = padic_exp(padic_log(pu));
            if (round.is_zero() || round.valuation() != 0 || round.precision() < N || !round.agrees_with(pu)) {
                fail("exp(log(u)) at p = " + std::to_string(p) + ", u = " + to_string(pu));
            }
        }
        // Convergence domain: v = vmin - 1 must be rejected by exp, u = 2 (or 3) by log.
        ++checks;
        try {
            padic_exp(PadicNumber::from_parts(p, vmin - 1, 1, N));
            fail("exp accepted v = " + std::to_string(vmin - 1) + " at p = " + std::to_string(p));
        } catch (const DomainError&) {
        }
        if (p != 2) {
            ++checks;
            try {
                padic_log(PadicNumber::from_integer(2, p, N));
                fail("log accepted u = 2 at p = " + std::to_string(p));
            } catch (const DomainError&) {
            }
        }
    }
    r.pass = failures == 0;
    r.detail = std::to_string(samples) + " samples per p in {2,3,5,7} at precision " + std::to_string(N) + ", " +
               std::to_string(checks) + " checks, " + std::to_string(failures) + " failures" +
               (failures ? ", first " + first : "");
    return r;
}

// 7. Herbrand quotients.
CheckResult herbrand(const VerifyOptions& o) {
    CheckResult r;
    const u64 modules = bound(o, 200);
    std::mt19937_64 rng(o.seed);
    u64 finite_failures = 0, perm_checks = 0, perm_failures = 0, sum_checks = 0, sum_failures = 0;
    std::string first;
    for (u64 i = 0; i < modules; ++i) {
        const RandomFiniteModule m = random_finite_module(rng);
        const HerbrandResult h = herbrand_components(m.module);
        if ((!h.q || *h.q != 1) && finite_failures++ == 0) first = "finite module #" + std::to_string(i);
    }
    std::vector<std::pair<CyclicModule, Rational>> perms;
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            ++perm_checks;
            const HerbrandResult h = herbrand_components(build_permutation_module(n, d));
            Rational expected(from_u64(d), from_u64(n));
            expected.canonicalize();
            if ((!h.q || *h.q != expected) && perm_failures++ == 0) {
                first = "perm(" + std::to_string(n) + "," + std::to_string(d) + ")";
            }
            if (h.q) perms.emplace_back(build_permutation_module(n, d), *h.q);
        }
    }
    // Direct sums of permutation modules over the same group, and with a finite module.
    for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = i; j < perms.size(); ++j) {
            if (perms[i].first.n != perms[j].first.n) continue;
            ++sum_checks;
            const HerbrandResult h = herbrand_components(direct_sum(perms[i].first, perms[j].first));
            if ((!h.q || *h.q != perms[i].second * perms[j].second) && sum_failures++ == 0) {
                first = "direct sum #" + std::to_string(sum_checks);
            }
        }
        const CyclicModule finite = trivial_module(perms[i].first.n, IntMatrix::from_rows({{6}}));
        ++sum_checks;
        const HerbrandResult h = herbrand_components(direct_sum(perms[i].first, finite));
        if ((!h.q || *h.q != perms[i].second) && sum_failures++ == 0) first = "perm + Z/6";
    }
    r.pass = finite_failures == 0 && perm_failures == 0 && sum_failures == 0;
    r.detail = std::to_string(modules) + " finite modules: " + std::to_string(finite_failures) + " with q != 1; " +
               std::to_string(perm_checks) + " permutation modules: " + std::to_string(perm_failures) +
               " with q != d/n; " + std::to_string(sum_checks) + " direct sums: " + std::to_string(sum_failures) +
               " not multiplicative" + (r.pass ? "" : ", first " + first);
    return r;
}

// 8. Prime frequencies in progressions and split frequencies.
CheckResult chebotarev(const VerifyOptions& o) {
    CheckResult r;
    r.time_limit_ms = 60'000;
    const u64 X = bound(o, 10'000'000);
    DensityOptions d;
    d.workers = o.workers;
    double worst = 0;
    std::ostringstream detail;
    detail << "X = " << X << ":";
    for (u64 n : {4, 5, 8, 12}) {
        const FrequencyReport rep = progression_density(n, X, d);
        worst = std::max(worst, rep.max_abs_deviation);
        detail << " n=" << n << " dev " << fmt(rep.max_abs_deviation) << ";";
    }
    for (i64 dk : {-4, 8}) {
        const FrequencyReport rep = quadratic_split_density(dk, X, d);
        const double dev = std::abs(rep.classes[0].frequency - 0.5);
        worst = std::max(worst, dev);
        detail << " d_K=" << dk << " split " << fmt(rep.classes[0].frequency) << ";";
    }
    r.pass = worst <= 0.005;
    detail << " max deviation " << fmt(worst) << " (tolerance 0.005)";
    r.detail = detail.str();
    return r;
}

// 9. Ideal counts: Z[i] slope near pi/4, class-independent slopes for -56.
CheckResult ideals_slope(const VerifyOptions& o) {
    CheckResult r;
    const u64 X1 = bound(o, 1'000'000);
    const u64 X2 = quick(o) ? 10'000 : 100'000;
    DensityOptions d;
    d.workers = o.workers;
    const SlopeReport gauss = ideal_count_slope(-4, X1, d);
    const double target = std::numbers::pi / 4;
    const bool gauss_ok = gauss.total_slope >= target * 0.99 && gauss.total_slope <= target * 1.01;
    const SlopeReport d56 = ideal_count_slope(-56, X2, d);
    const bool spread_ok = d56.classes.size() == 4 && d56.max_relative_spread <= 0.05;
    r.pass = gauss_ok && spread_ok;
    std::ostringstream detail;
    detail << "Z[i] slope " << fmt(gauss.total_slope) << " at X = " << X1 << " (pi/4 = " << fmt(target)
           << ", tolerance 1%); d_K = -56 at X = " << X2 << ": slopes";
    for (const auto& c : d56.classes) detail << " " << fmt(c.slope);
    detail << ", max relative spread " << fmt(d56.max_relative_spread) << " (tolerance 5%)";
    r.detail = detail.str();
    return r;
}

// 10. e f r bookkeeping for cyclotomic and quadratic fields.
CheckResult decomposition(const VerifyOptions& o) {
    CheckResult r;
    const u64 limit = bound(o, 1000);
    u64 checks = 0, failures = 0;
    std::string first;
    const auto primes = small_primes(limit - 1);
    for (u64 p : primes) {
        for (u64 m = 1; m <= 60; ++m) {
            ++checks;
            const DecompositionType t = decomposition_type_cyclotomic(p, m);
            bool ok = t.e * t.f * t.r == euler_phi(m);
            if (m >= 3 && m % p != 0) ok = ok && t.e == 1 && frobenius_cyclotomic(p, m).order == t.f;
            if (!ok && failures++ == 0) first = "cyclotomic p = " + std::to_string(p) + ", m = " + std::to_string(m);
        }
        for (i64 dk : {-4, -3, -7, -8, -56, 8, 13}) {
            ++checks;
            const PrimeDecomposition dec = decompose_prime(p, dk);
            const QuadOrder order(dk);
            QuadIdeal product = unit_ideal(order);
            u64 sum_ef = 0;
            for (const QuadIdeal& prime : dec.primes) {
                product = ideal_mul(product, ideal_pow(prime, static_cast<unsigned>(dec.type.e)));
                sum_ef += static_cast<u64>(dec.type.e * dec.type.f);
            }
            const QuadIdeal p_ideal(order, static_cast<i64>(p), 0, static_cast<i64>(p));
            const bool ok = sum_ef == 2 && product == p_ideal &&
                            dec.type.e * dec.type.f * dec.type.r == 2;
            if (!ok && failures++ == 0) first = "quadratic p = " + std::to_string(p) + ", d_K = " + std::to_string(dk);
        }
    }
    r.pass = failures == 0;
    r.detail = std::to_string(checks) + " decompositions for p < " + std::to_string(limit) + ", " +
               std::to_string(failures) + " failures" + (failures ? ", first " + first : "");
    return r;
}

}  // namespace

Profile parse_profile(const std::string& text) {
    if (text == "quick") return Profile::Quick;
    if (text == "full") return Profile::Full;
    throw DomainError("unknown profile '" + text + "' (expected quick or full)");
}

std::string to_string(Profile profile) { return profile == Profile::Quick ? "quick" : "full"; }

const std::vector<std::string>& criterion_names() {
    static const std::vector<std::string> names{"reciprocity", "x4plus1",    "x2plus14y2", "rayclass", "hilbert",
                                                "padic",       "herbrand",   "chebotarev", "ideals",   "decomposition"};
    return names;
}

int criterion_id(const std::string& name_or_number) {
    const auto& names = criterion_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name_or_number || std::to_string(i + 1) == name_or_number) return static_cast<int>(i + 1);
    }
    throw DomainError("unknown criterion '" + name_or_number + "'");
}

CheckResult run_criterion(int id, const VerifyOptions& options) {
    using Fn = CheckResult (*)(const VerifyOptions&);
    static const Fn table[] = {reciprocity, x4plus1, x2plus14y2, rayclass_q,   hilbert,
                               padic,       herbrand, chebotarev, ideals_slope, decomposition};
    if (id < 1 || id > 10) throw DomainError("criterion id must be in 1..10");
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = table[id - 1](options);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.criterion = id;
    r.name = criterion_names()[static_cast<std::size_t>(id - 1)];
    return r;
}

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= 10; ++id) out.push_back(run_criterion(id, options));
    return out;
}

}  // namespace cft
