#pragma once

#include "cft/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace cft {

inline constexpr u64 kDefaultSegment = u64{1} << 18;

/// Primes up to `limit` by a plain sieve of Eratosthenes.
std::vector<u64> small_primes(u64 limit);

/// Visits every prime in [lo, hi] in increasing order. Memory is
/// O(sqrt(hi) + segment); only odd numbers are stored in a segment.
template <typename Visitor>
void for_each_prime(u64 lo, u64 hi, Visitor&& visit, u64 segment = kDefaultSegment) {
    if (hi < 2 || lo > hi) return;
    lo = std::max<u64>(lo, 2);
    if (lo == 2) {
        visit(u64{2});
        lo = 3;
    }
    if (lo > hi) return;
    if (lo % 2 == 0) ++lo;
    const std::vector<u64> base = small_primes(isqrt(hi));
    segment = std::max<u64>(segment, 64);
    std::vector<unsigned char> composite;
    for (u64 start = lo; start <= hi;) {
        // Segment covers odd numbers start, start+2, ..., end (inclusive).
        const u64 count = std::min<u64>(segment, (hi - start) / 2 + 1);
        const u64 end = start + 2 * (count - 1);
        composite.assign(count, 0);
        for (std::size_t i = 1; i < base.size(); ++i) {  // skip 2
            const u64 p = base[i];
            if (p * p > end) break;
            u64 first = std::max(p * p, (start + p - 1) / p * p);
            if (first % 2 == 0) first += p;
            for (u64 m = first; m <= end; m += 2 * p) composite[(m - start) / 2] = 1;
        }
        for (u64 i = 0; i < count; ++i) {
            if (!composite[i]) {
                const u64 n = start + 2 * i;
                if (n > 1) visit(n);
            }
        }
        if (end >= hi) break;
        start = end + 2;
    }
}

/// Ascending list of primes in [lo, hi]; throws DomainError when lo > hi or lo < 2.
std::vector<u64> sieve_primes(u64 lo, u64 hi, u64 segment = kDefaultSegment);

}  // namespace cft
