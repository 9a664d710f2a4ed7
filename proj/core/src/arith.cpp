#include "cft/arith.hpp"

#include "cft/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

namespace cft {

namespace {

constexpr u64 kTrialLimit = 1'000'000;

u64 magnitude(i64 n) {
    return n < 0 ? u64{0} - static_cast<u64>(n) : static_cast<u64>(n);
}

bool miller_rabin_witness(u64 n, u64 d, int s, u64 a) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Brent's variant with f(x) = x^2 + c.
u64 pollard_brent(u64 n, u64 c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
    constexpr u64 m = 128;
    do {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        u64 k = 0;
        do {
            ys = y;
            for (u64 i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mul_mod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void split_composite(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    if (is_square(static_cast<i64>(n))) {
        const u64 r = isqrt(n);
        split_composite(r, out);
        split_composite(r, out);
        return;
    }
    for (u64 c = 1;; ++c) {
        const u64 d = pollard_brent(n, c);
        if (d != n && d != 1) {
            split_composite(d, out);
            split_composite(n / d, out);
            return;
        }
    }
}

}  // namespace

i64 FactoredInteger::value() const {
    i128 acc = 1;
    for (const auto& [p, e] : factors) {
        for (unsigned i = 0; i < e; ++i) {
            acc *= p;
            if (acc > static_cast<i128>(INT64_MAX)) throw LimitError("FactoredInteger::value: overflow");
        }
    }
    return static_cast<i64>(acc) * sign;
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 reduce_mod(i64 a, u64 m) {
    if (a >= 0) return static_cast<u64>(a) % m;
    const u64 r = magnitude(a) % m;
    return r == 0 ? 0 : m - r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 inverse_mod(i64 a, u64 m) {
    if (m == 1) return 0;
    i128 old_r = reduce_mod(a, m), r = m;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1) {
        throw DomainError("inverse_mod: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    i128 inv = old_s % static_cast<i128>(m);
    if (inv < 0) inv += m;
    return static_cast<u64>(inv);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    if (n < 37 * 37) return true;
    const int s = std::countr_zero(n - 1);
    const u64 d = (n - 1) >> s;
    // These twelve bases are deterministic for every n < 2^64.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, d, s, a)) return false;
    }
    return true;
}

FactoredInteger factorize(i64 n) {
    if (n == 0) throw DomainError("factorize: n must be nonzero");
    FactoredInteger result;
    result.sign = n < 0 ? -1 : 1;
    u64 m = magnitude(n);
    auto push = [&](u64 p, unsigned e) { result.factors.push_back({p, e}); };
    for (u64 p = 2; p <= kTrialLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        push(p, e);
    }
    if (m > 1) {
        std::vector<u64> rest;
        split_composite(m, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            push(rest[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    return result;
}

ResidueClass crt(std::span<const Congruence> congruences) {
    if (congruences.empty()) throw DomainError("crt: at least one congruence is required");
    u64 modulus = 1;
    u64 value = 0;
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        const auto& c = congruences[i];
        if (c.modulus == 0) throw DomainError("crt: modulus must be positive");
        for (std::size_t j = 0; j < i; ++j) {
            if (std::gcd(congruences[j].modulus, c.modulus) != 1) {
                throw DomainError("crt: moduli " + std::to_string(congruences[j].modulus) + " and " +
                                  std::to_string(c.modulus) + " are not coprime");
            }
        }
        const u128 next = static_cast<u128>(modulus) * c.modulus;
        if (next > static_cast<u128>(INT64_MAX)) throw LimitError("crt: product of moduli exceeds int64");
        const u64 r = reduce_mod(c.residue, c.modulus);
        // value + modulus * t = r (mod c.modulus)
        const u64 diff = (r + c.modulus - value % c.modulus) % c.modulus;
        const u64 t = mul_mod(diff, inverse_mod(static_cast<i64>(modulus % c.modulus), c.modulus), c.modulus);
        value = static_cast<u64>(value + static_cast<u128>(modulus) * t);
        modulus = static_cast<u64>(next);
    }
    return {modulus, value % modulus};
}

int kronecker_symbol(i64 a, i64 n) {
    if (n == 0) throw DomainError("kronecker_symbol: n = 0 is not supported");
    u64 m = magnitude(n);
    int result = 1;
    const int twos = std::countr_zero(m);
    m >>= twos;
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        const u64 r8 = reduce_mod(a, 8);
        if ((twos & 1) && (r8 == 3 || r8 == 5)) result = -result;
    }
    u64 x = reduce_mod(a, m);
    while (x != 0) {
        const int tz = std::countr_zero(x);
        x >>= tz;
        if ((tz & 1) && (m % 8 == 3 || m % 8 == 5)) result = -result;
        if (x % 4 == 3 && m % 4 == 3) result = -result;
        std::swap(x, m);
        x %= m;
    }
    return m == 1 ? result : 0;
}

std::optional<u64> sqrt_mod_p(i64 a, u64 p) {
    if (p == 2 || !is_prime(p)) {
        throw DomainError("sqrt_mod_p: modulus " + std::to_string(p) + " is not an odd prime");
    }
    const u64 n = reduce_mod(a, p);
    if (n == 0) return 0;
    if (kronecker_symbol(static_cast<i64>(n), static_cast<i64>(p)) != 1) return std::nullopt;
    u64 r;
    if (p % 4 == 3) {
        r = pow_mod(n, (p + 1) / 4, p);
    } else {
        u64 q = p - 1;
        int s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        u64 z = 2;
        while (kronecker_symbol(static_cast<i64>(z), static_cast<i64>(p)) != -1) ++z;
        u64 c = pow_mod(z, q, p);
        u64 t = pow_mod(n, q, p);
        r = pow_mod(n, (q + 1) / 2, p);
        int m = s;
        while (t != 1) {
            int i = 0;
            u64 t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
            r = mul_mod(r, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }
    return std::min(r, p - r);
}

u64 euler_phi(u64 n) {
    if (n == 0) throw DomainError("euler_phi: n must be positive");
    u64 phi = n;
    for (const auto& [p, e] : factorize(static_cast<i64>(n)).factors) phi = phi / p * (p - 1);
    return phi;
}

u64 multiplicative_order(i64 a, u64 n) {
    if (n < 2) throw DomainError("multiplicative_order: modulus must be >= 2");
    const u64 x = reduce_mod(a, n);
    if (std::gcd(x, n) != 1) {
        throw DomainError("multiplicative_order: gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
    }
    u64 order = euler_phi(n);
    for (const auto& [q, e] : factorize(static_cast<i64>(order)).factors) {
        for (unsigned i = 0; i < e && order % q == 0 && pow_mod(x, order / q, n) == 1; ++i) order /= q;
    }
    return order;
}

int valuation(i64 n, u64 p) {
    if (n == 0) throw DomainError("valuation: n must be nonzero");
    if (p < 2) throw DomainError("valuation: p must be >= 2");
    u64 m = magnitude(n);
    int v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
    while (static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(i64 n) {
    if (n < 0) return false;
    const u64 r = isqrt(static_cast<u64>(n));
    return r * r == static_cast<u64>(n);
}

std::string to_string(const FactoredInteger& f) {
    std::ostringstream out;
    if (f.sign < 0) out << "-";
    if (f.factors.empty()) {
        out << "1";
        return out.str();
    }
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) out << "*";
        out << f.factors[i].prime;
        if (f.factors[i].exponent > 1) out << "^" << f.factors[i].exponent;
    }
    return out.str();
}

}  // namespace cft
