#pragma once

// Slow, obviously-correct reference computations. Nothing here calls into
// cft beyond plain value types, so a bug in the library cannot hide in both.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

bool is_prime(u64 n);
std::vector<u64> primes_upto(u64 n);  // plain Eratosthenes
std::vector<std::pair<u64, unsigned>> trial_factor(i64 n);

u64 powmod(u64 b, u64 e, u64 m);
i64 mod(i64 a, i64 m);
u64 gcd(u64 a, u64 b);
u64 phi(u64 n);
/// Legendre symbol by Euler's criterion; p an odd prime.
int legendre(i64 a, u64 p);
u64 order_by_search(i64 a, u64 n);
bool is_squarefree(i64 n);
bool is_fundamental(i64 d);

/// Pattern (sorted degrees) of a squarefree f over F_p, deg f <= 4, found by
/// stripping roots and then trying every monic quadratic divisor.
std::vector<int> pattern_small(const std::vector<i64>& coeffs, u64 p);

/// exp or log series summed exactly over Q, reduced mod p^k.
mpz_class exp_series_mod(const mpq_class& x, u64 p, int k, int terms);
mpz_class log_series_mod(const mpq_class& u, u64 p, int k, int terms);
mpz_class rational_mod(const mpq_class& q, const mpz_class& m);

/// Square class of a nonzero rational in Q_p^*/Q_p^*2 as (v mod 2, unit
/// class): the unit class is the Legendre symbol for odd p and u mod 8 for
/// p = 2.
std::pair<int, int> square_class(const mpq_class& a, u64 p);
/// (a, b)_p from the norm group: collect the square classes of x^2 - b y^2
/// for small integers x, y and test whether a's class is among them.
int hilbert_by_norms(i64 a, i64 b, u64 p);

/// Lattice points (x, y) != 0 with a x^2 + b x y + c y^2 <= X.
u64 form_points_upto(i64 a, i64 b, i64 c, u64 X);
/// Reduced primitive forms of discriminant D < 0 by direct enumeration.
std::set<std::tuple<i64, i64, i64>> reduced_forms(i64 D);
/// Number of ideals of norm <= X in the maximal order of disc d:
/// sum_{n <= X} sum_{k | n} (d/k).
u64 ideal_count_upto(i64 d, u64 X);
int kronecker_naive(i64 a, u64 n);

/// Finite module A = sum Z/orders[i] with an action given in the same
/// coordinates. Returns (|H^0|, |H^1|) by enumerating every element.
std::pair<u64, u64> herbrand_by_enumeration(const std::vector<i64>& orders,
                                            const std::vector<std::vector<i64>>& action, unsigned n);

}  // namespace oracle
