#include "cft/sieve.hpp"

#include "cft/error.hpp"

namespace cft {

std::vector<u64> small_primes(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

std::vector<u64> sieve_primes(u64 lo, u64 hi, u64 segment) {
    if (lo < 2) throw DomainError("sieve_primes: lower bound must be >= 2");
    if (lo > hi) {
        throw DomainError("sieve_primes: inverted range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    std::vector<u64> out;
    for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); }, segment);
    return out;
}

}  // namespace cft
