#include "cft/ideals.hpp"

#include "cft/error.hpp"
#include "cft/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace cft {

namespace {

i64 checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw LimitError("ideal arithmetic overflowed int64");
    return static_cast<i64>(v);
}

i128 floor_mod(i128 a, i128 m) {
    i128 r = a % m;
    return r < 0 ? r + m : r;
}

struct Vec2 {
    i128 x;
    i128 y;
};

// Extended gcd on i128: returns (g, s, t) with s*a + t*b = g >= 0.
std::tuple<i128, i128, i128> ext_gcd(i128 a, i128 b) {
    i128 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const i128 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
        std::tie(old_t, t) = std::pair{t, old_t - q * t};
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// HNF of the Z-lattice spanned by vectors (x, y): basis {(A, 0), (B, C)}.
std::tuple<i64, i64, i64> lattice_hnf(const std::vector<Vec2>& vectors) {
    Vec2 pivot{0, 0};
    i128 A = 0;
    for (const Vec2& g : vectors) {
        if (g.y == 0) {
            A = gcd128(A, g.x);
            continue;
        }
        if (pivot.y == 0) {
            A = gcd128(A, pivot.x);
            pivot = g;
            continue;
        }
        const auto [d, s, t] = ext_gcd(pivot.y, g.y);
        const Vec2 combined{s * pivot.x + t * g.x, d};
        const i128 leftover = (g.y / d) * pivot.x - (pivot.y / d) * g.x;
        A = gcd128(A, leftover);
        pivot = combined;
    }
    if (pivot.y < 0) pivot = {-pivot.x, -pivot.y};
    if (A == 0 || pivot.y == 0) throw DomainError("generators do not span a full-rank lattice");
    return {checked(A), checked(floor_mod(pivot.x, A)), checked(pivot.y)};
}

// Roots of g(t) = t^2 + D t + n modulo a prime power, cached per modulus.
class RootTable {
public:
    RootTable(i64 D, i64 n) : D_(D), n_(n), disc_(static_cast<i128>(D) * D - 4 * static_cast<i128>(n)) {}

    const std::vector<u64>& roots(u64 p, unsigned k, u64 pk) {
        auto it = cache_.find(pk);
        if (it != cache_.end()) return it->second;
        std::vector<u64> result;
        if (k == 1) {
            result = roots_mod_prime(p);
        } else {
            const u64 prev_mod = pk / p;
            const std::vector<u64> prev = roots(p, k - 1, prev_mod);
            for (u64 r : prev) {
                for (u64 j = 0; j < p; ++j) {
                    const u64 t = r + j * prev_mod;
                    if (eval(t, pk) == 0) result.push_back(t);
                }
            }
            std::sort(result.begin(), result.end());
        }
        return cache_.emplace(pk, std::move(result)).first->second;
    }

    u64 eval(u64 t, u64 m) const {
        const i128 v = static_cast<i128>(t) * t + static_cast<i128>(D_) * t + n_;
        return static_cast<u64>(floor_mod(v, m));
    }

private:
    std::vector<u64> roots_mod_prime(u64 p) const {
        std::vector<u64> out;
        if (p == 2) {
            for (u64 t = 0; t < 2; ++t) {
                if (eval(t, 2) == 0) out.push_back(t);
            }
            return out;
        }
        // t = (-D +- sqrt(disc)) / 2
        const auto s = sqrt_mod_p(static_cast<i64>(floor_mod(disc_, p)), p);
        if (!s) return out;
        const u64 inv2 = (p + 1) / 2;
        const u64 minus_d = reduce_mod(-D_, p);
        const u64 r1 = mul_mod((minus_d + *s) % p, inv2, p);
        const u64 r2 = mul_mod((minus_d + p - *s) % p, inv2, p);
        out.push_back(r1);
        if (r2 != r1) out.push_back(r2);
        std::sort(out.begin(), out.end());
        return out;
    }

    i64 D_;
    i64 n_;
    i128 disc_;
    std::unordered_map<u64, std::vector<u64>> cache_;
};

std::vector<u64> smallest_prime_factors(u64 limit) {
    std::vector<u64> spf(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf[i]) continue;
        for (u64 j = i; j <= limit; j += i) {
            if (!spf[j]) spf[j] = i;
        }
    }
    return spf;
}

// All b' in [0, a') with a' | b'^2 + D b' + n.
std::vector<u64> primitive_roots_mod(u64 a, const std::vector<u64>& spf, RootTable& table) {
    std::vector<u64> acc{0};
    u64 modulus = 1;
    u64 rest = a;
    while (rest > 1) {
        const u64 p = spf[rest];
        unsigned k = 0;
        u64 pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            ++k;
        }
        const std::vector<u64>& local = table.roots(p, k, pk);
        if (local.empty()) return {};
        std::vector<u64> next;
        next.reserve(acc.size() * local.size());
        const u64 inv = inverse_mod(static_cast<i64>(modulus % pk), pk);
        for (u64 r : acc) {
            for (u64 s : local) {
                // x = r (mod modulus), x = s (mod pk)
                const u64 diff = (s + pk - r % pk) % pk;
                const u64 t = mul_mod(diff, inv, pk);
                next.push_back(r + modulus * t);
            }
        }
        modulus *= pk;
        acc = std::move(next);
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

struct EnumerationContext {
    QuadOrder order;
    ClassNumberResult classes;
    std::vector<u64> spf;
    u64 X;
};

EnumerationContext make_context(i64 d_K, u64 X, const EnumerationOptions& options) {
    if (d_K >= 0) throw DomainError("ideal enumeration requires a negative fundamental discriminant");
    if (!is_fundamental_discriminant(d_K)) {
        throw DomainError("ideal enumeration: " + std::to_string(d_K) + " is not a fundamental discriminant");
    }
    if (X > options.cap) {
        throw LimitError("ideal enumeration bound " + std::to_string(X) + " exceeds cap " + std::to_string(options.cap));
    }
    return {QuadOrder(d_K), class_number_neg(d_K), smallest_prime_factors(std::max<u64>(X, 1)), X};
}

std::size_t class_of_primitive(const EnumerationContext& ctx, i64 a, i64 b) {
    if (ctx.classes.h == 1) return 0;
    const i64 D = ctx.order.D();
    const i128 nb = static_cast<i128>(b) * b + static_cast<i128>(D) * b + ctx.order.w_norm();
    const BinaryQuadraticForm f{a, 2 * b + D, checked(nb / a)};
    return class_index(ctx.classes, reduce_form(f));
}

// Calls visit(a', b', c) for every ideal c*[a', b' + w] with a' in [lo, hi).
template <typename Visit>
void enumerate_range(const EnumerationContext& ctx, u64 lo, u64 hi, Visit&& visit) {
    RootTable table(ctx.order.D(), ctx.order.w_norm());
    for (u64 a = lo; a < hi; ++a) {
        const std::vector<u64> roots = primitive_roots_mod(a, ctx.spf, table);
        for (u64 b : roots) {
            const std::size_t cls = class_of_primitive(ctx, static_cast<i64>(a), static_cast<i64>(b));
            for (u64 c = 1; c * c * a <= ctx.X; ++c) visit(a, b, c, cls);
        }
    }
}

}  // namespace

QuadIdeal::QuadIdeal(const QuadOrder& order, i64 a, i64 b, i64 c) : order_(order), a_(a), b_(b), c_(c) {
    if (!order.is_maximal()) throw DomainError("ideal arithmetic is only supported in maximal orders");
    if (a <= 0 || c <= 0) throw DomainError("ideal HNF requires a > 0 and c > 0");
    if (b < 0 || b >= a) throw DomainError("ideal HNF requires 0 <= b < a");
    if (a % c != 0 || b % c != 0) throw DomainError("ideal HNF requires c | a and c | b");
    const i64 ap = a / c, bp = b / c;
    const i128 nb = static_cast<i128>(bp) * bp + static_cast<i128>(order.D()) * bp + order.w_norm();
    if (nb % ap != 0) {
        throw DomainError("[" + std::to_string(a) + ", " + std::to_string(b) + " + " + std::to_string(c) +
                          "*w] is not closed under multiplication by w");
    }
}

bool QuadIdeal::contains(i64 x, i64 y) const {
    if (y % c_ != 0) return false;
    const i128 rest = static_cast<i128>(x) - static_cast<i128>(b_) * (y / c_);
    return rest % a_ == 0;
}

bool QuadIdeal::contains(const QuadElement& alpha) const {
    if (!(alpha.order() == order_)) throw DomainError("contains: element from a different order");
    if (!alpha.is_integral()) return false;
    return contains(to_i64(alpha.x()), to_i64(alpha.y()));
}

bool QuadIdeal::is_contained_in(const QuadIdeal& other) const {
    return other.contains(a_, 0) && other.contains(b_, c_);
}

std::string to_string(const QuadIdeal& ideal) {
    std::ostringstream out;
    out << "[" << ideal.a() << ", " << ideal.b() << " + " << ideal.c() << "*w]";
    return out.str();
}

QuadIdeal unit_ideal(const QuadOrder& order) { return QuadIdeal(order, 1, 0, 1); }

QuadIdeal ideal_from_generators(const QuadOrder& order, const std::vector<std::pair<i64, i64>>& generators) {
    const i128 D = order.D(), n = order.w_norm();
    std::vector<Vec2> vectors;
    for (const auto& [x, y] : generators) {
        vectors.push_back({x, y});
        // (x + y w) w = -n y + (x + D y) w
        vectors.push_back({-n * y, static_cast<i128>(x) + D * y});
    }
    const auto [A, B, C] = lattice_hnf(vectors);
    return QuadIdeal(order, A, B, C);
}

QuadIdeal principal_ideal(const QuadElement& alpha) {
    if (!alpha.is_integral()) throw DomainError("principal_ideal: element is not integral");
    if (alpha.x() == 0 && alpha.y() == 0) throw DomainError("principal_ideal: zero element");
    return ideal_from_generators(alpha.order(), {{to_i64(alpha.x()), to_i64(alpha.y())}});
}

QuadIdeal ideal_mul(const QuadIdeal& I, const QuadIdeal& J) {
    if (!(I.order() == J.order())) throw DomainError("ideal_mul: ideals belong to different orders");
    const i128 D = I.order().D(), n = I.order().w_norm();
    const std::pair<i128, i128> gi[2] = {{I.a(), 0}, {I.b(), I.c()}};
    const std::pair<i128, i128> gj[2] = {{J.a(), 0}, {J.b(), J.c()}};
    std::vector<Vec2> vectors;
    for (const auto& [x1, y1] : gi) {
        for (const auto& [x2, y2] : gj) {
            const i128 x = x1 * x2 - n * y1 * y2;
            const i128 y = x1 * y2 + x2 * y1 + D * y1 * y2;
            vectors.push_back({x, y});
            vectors.push_back({-n * y, x + D * y});
        }
    }
    const auto [A, B, C] = lattice_hnf(vectors);
    return QuadIdeal(I.order(), A, B, C);
}

QuadIdeal ideal_pow(const QuadIdeal& a, unsigned k) {
    QuadIdeal result = unit_ideal(a.order());
    for (unsigned i = 0; i < k; ++i) result = ideal_mul(result, a);
    return result;
}

QuadIdeal conjugate(const QuadIdeal& ideal) {
    // conj(b + c w) = b + c D - c w
    const i64 D = ideal.order().D();
    return ideal_from_generators(ideal.order(), {{ideal.a(), 0}, {ideal.b() + ideal.c() * D, -ideal.c()}});
}

std::string to_string(SplittingKind kind) {
    switch (kind) {
        case SplittingKind::Split: return "split";
        case SplittingKind::Inert: return "inert";
        case SplittingKind::Ramified: return "ramified";
    }
    return "?";
}

PrimeDecomposition decompose_prime(u64 p, i64 d_K) {
    if (!is_fundamental_discriminant(d_K)) {
        throw DomainError("decompose_prime: " + std::to_string(d_K) + " is not a fundamental discriminant");
    }
    if (!is_prime(p)) throw DomainError("decompose_prime: " + std::to_string(p) + " is not prime");
    const QuadOrder order(d_K);
    RootTable table(-d_K, order.w_norm());  // roots of t^2 - D t + n, the minimal polynomial of w
    const std::vector<u64> roots = table.roots(p, 1, p);
    const i64 ip = static_cast<i64>(p);
    PrimeDecomposition out;
    auto prime_above = [&](u64 r) { return QuadIdeal(order, ip, static_cast<i64>((p - r) % p), 1); };
    if (d_K % ip == 0) {
        out.type = {SplittingKind::Ramified, 2, 1, 1};
        out.primes.push_back(prime_above(roots.at(0)));
    } else if (roots.size() == 2) {
        out.type = {SplittingKind::Split, 1, 1, 2};
        out.primes = {prime_above(roots[0]), prime_above(roots[1])};
        std::sort(out.primes.begin(), out.primes.end(), [](const auto& x, const auto& y) { return x.b() < y.b(); });
    } else {
        out.type = {SplittingKind::Inert, 1, 2, 1};
        out.primes.push_back(QuadIdeal(order, ip, 0, ip));
    }
    return out;
}

std::vector<std::pair<QuadIdeal, unsigned>> factor_ideal(const QuadIdeal& ideal) {
    std::vector<std::pair<QuadIdeal, unsigned>> out;
    if (ideal.norm() == 1) return out;
    for (const auto& [p, e] : factorize(ideal.norm()).factors) {
        const PrimeDecomposition dec = decompose_prime(p, ideal.order().D());
        for (const QuadIdeal& prime : dec.primes) {
            unsigned k = 0;
            QuadIdeal power = prime;
            while (ideal.is_contained_in(power)) {
                ++k;
                power = ideal_mul(power, prime);
            }
            if (k > 0) out.emplace_back(prime, k);
        }
    }
    return out;
}

i64 residue_unit_count(const QuadIdeal& ideal) {
    i128 count = 1;
    for (const auto& [prime, k] : factor_ideal(ideal)) {
        const i128 np = prime.norm();
        i128 term = np - 1;
        for (unsigned i = 1; i < k; ++i) term *= np;
        count *= term;
    }
    return checked(count);
}

BinaryQuadraticForm ideal_form(const QuadIdeal& ideal) {
    const i64 a = ideal.a() / ideal.c();
    const i64 b = ideal.b() / ideal.c();
    const i64 D = ideal.order().D();
    const i128 nb = static_cast<i128>(b) * b + static_cast<i128>(D) * b + ideal.order().w_norm();
    return {a, 2 * b + D, checked(nb / a)};
}

std::optional<QuadElement> is_principal_imaginary(const QuadIdeal& ideal) {
    const QuadOrder& order = ideal.order();
    if (!order.is_imaginary()) throw DomainError("is_principal_imaginary: real quadratic fields are not supported");
    const Reduction red = reduce_form_with_transform(ideal_form(ideal));
    if (!(red.form == principal_form(order.discriminant()))) return std::nullopt;
    // The reduced form represents 1 at (1, 0), so the input form does at (p, r).
    const i64 ap = ideal.a() / ideal.c(), bp = ideal.b() / ideal.c();
    const i128 x = static_cast<i128>(red.transform.p) * ap + static_cast<i128>(red.transform.r) * bp;
    const i128 y = red.transform.r;
    return QuadElement(order, from_i64(checked(x * ideal.c())), from_i64(checked(y * ideal.c())));
}

std::vector<IdealEntry> enumerate_ideals_up_to_norm(i64 d_K, u64 X, const EnumerationOptions& options) {
    const EnumerationContext ctx = make_context(d_K, X, options);
    auto chunks = parallel_chunks<std::vector<IdealEntry>>(
        1, X + 1, options.workers, [&](u64 lo, u64 hi) {
            std::vector<IdealEntry> part;
            enumerate_range(ctx, lo, hi, [&](u64 a, u64 b, u64 c, std::size_t cls) {
                const i64 ia = static_cast<i64>(a * c), ib = static_cast<i64>(b * c), ic = static_cast<i64>(c);
                part.push_back({QuadIdeal(ctx.order, ia, ib, ic), cls});
            });
            return part;
        });
    std::vector<IdealEntry> all;
    for (auto& part : chunks) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), [](const IdealEntry& x, const IdealEntry& y) {
        const auto kx = std::tuple(x.ideal.norm(), x.ideal.a(), x.ideal.b(), x.ideal.c());
        const auto ky = std::tuple(y.ideal.norm(), y.ideal.a(), y.ideal.b(), y.ideal.c());
        return kx < ky;
    });
    return all;
}

std::vector<u64> count_ideals_by_class(i64 d_K, u64 X, const EnumerationOptions& options) {
    const EnumerationContext ctx = make_context(d_K, X, options);
    const std::size_t h = static_cast<std::size_t>(ctx.classes.h);
    auto chunks = parallel_chunks<std::vector<u64>>(1, X + 1, options.workers, [&](u64 lo, u64 hi) {
        std::vector<u64> counts(h, 0);
        enumerate_range(ctx, lo, hi, [&](u64, u64, u64, std::size_t cls) { ++counts[cls]; });
        return counts;
    });
    std::vector<u64> total(h, 0);
    for (const auto& part : chunks) {
        for (std::size_t i = 0; i < h; ++i) total[i] += part[i];
    }
    return total;
}

void write_ideals_tsv(std::ostream& out, const std::vector<IdealEntry>& entries) {
    out << "norm\ta\tb\tc\tclass\n";
    for (const auto& e : entries) {
        out << e.ideal.norm() << '\t' << e.ideal.a() << '\t' << e.ideal.b() << '\t' << e.ideal.c() << '\t'
            << e.class_index << '\n';
    }
}

}  // namespace cft
