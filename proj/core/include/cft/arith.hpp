#pragma once

// Exact machine-integer arithmetic: primality, factorization, CRT,
// Kronecker symbols, modular square roots and multiplicative orders.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cft {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct FactoredInteger {
    int sign = 1;
    std::vector<PrimePower> factors;

    /// Reconstructs the integer; throws LimitError on int64 overflow.
    i64 value() const;
    bool operator==(const FactoredInteger&) const = default;
};

/// An element of Z/mZ with 0 <= value < modulus.
struct ResidueClass {
    u64 modulus = 1;
    u64 value = 0;
    bool operator==(const ResidueClass&) const = default;
};

struct Congruence {
    i64 residue = 0;
    u64 modulus = 1;
};

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}
u64 pow_mod(u64 base, u64 exp, u64 m);
/// Least nonnegative residue of a modulo m (m >= 1).
u64 reduce_mod(i64 a, u64 m);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
u64 inverse_mod(i64 a, u64 m);
u64 gcd_u64(u64 a, u64 b);

bool is_prime(u64 n);

/// Trial division to 10^6, then Pollard-Brent rho with polynomials x^2 + c, c = 1, 2, ...
FactoredInteger factorize(i64 n);

/// Solves a system with pairwise coprime moduli. Throws DomainError naming the
/// first offending pair, never merges non-coprime moduli silently.
ResidueClass crt(std::span<const Congruence> congruences);

/// Kronecker symbol (a/n). Sign of n is ignored ((a/+-1) = +1); n = 0 throws.
int kronecker_symbol(i64 a, i64 n);

/// Tonelli-Shanks. Returns min(r, p - r), or nullopt when a is a non-residue.
std::optional<u64> sqrt_mod_p(i64 a, u64 p);

/// Least k >= 1 with a^k = 1 (mod n). Requires n >= 2 and gcd(a, n) = 1.
u64 multiplicative_order(i64 a, u64 n);

u64 euler_phi(u64 n);

/// Exponent of p in n (n != 0).
int valuation(i64 n, u64 p);

/// Integer square root: largest r with r*r <= n.
u64 isqrt(u64 n);
bool is_square(i64 n);

std::string to_string(const FactoredInteger& f);

}  // namespace cft
