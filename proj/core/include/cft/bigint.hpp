#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cft {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Converts to int64, throwing LimitError when the value does not fit.
std::int64_t to_i64(const BigInt& x);
BigInt from_i64(std::int64_t x);
BigInt from_u64(std::uint64_t x);

/// p-adic valuation of a nonzero integer.
int valuation(const BigInt& n, const BigInt& p);
/// p-adic valuation of a nonzero rational.
int valuation(const Rational& q, const BigInt& p);

/// Residue of a p-integral rational modulo m (denominator must be invertible).
BigInt rational_mod(const Rational& q, const BigInt& m);

/// Rational from text "a", "-a/b".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Miller-Rabin: deterministic below 2^64, otherwise 40 rounds with a fixed seed.
bool is_probable_prime(const BigInt& n);

}  // namespace cft
