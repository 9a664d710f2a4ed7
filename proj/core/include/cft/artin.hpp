#pragma once

// Frobenius elements and decomposition in Q(zeta_m)/Q, the Artin map on
// ideals of Q, and splitting patterns of integer polynomials mod p.

#include "cft/arith.hpp"
#include "cft/bigint.hpp"
#include "cft/polynomial.hpp"

#include <string>
#include <vector>

namespace cft {

struct DecompositionType {
    u64 e = 1;
    u64 f = 1;
    u64 r = 1;
    bool operator==(const DecompositionType&) const = default;
};

struct Frobenius {
    ResidueClass element;
    u64 order = 1;
};

/// The class of p in (Z/mZ)* and its order. Throws when p | m.
Frobenius frobenius_cyclotomic(u64 p, u64 m);

/// m = p^k m' with p not dividing m': e = phi(p^k), f = ord_{m'}(p), r = phi(m')/f.
DecompositionType decomposition_type_cyclotomic(u64 p, u64 m);

/// a * b^-1 mod m for a positive rational a/b coprime to m.
ResidueClass artin_map_q(const Rational& x, u64 m);

struct ArtinKernelReport {
    u64 modulus = 0;
    u64 samples = 0;
    u64 in_kernel = 0;
    std::vector<Rational> counterexamples;
};

/// Samples x = 1 (mod* (m)*inf) from a seeded generator and checks that the
/// Artin map sends each to 1.
ArtinKernelReport verify_artin_kernel(u64 m, u64 samples, u64 seed);

struct SplittingPattern {
    std::vector<int> degrees;  // ascending
    bool operator==(const SplittingPattern&) const = default;
    auto operator<=>(const SplittingPattern&) const = default;
};

/// "{1,1,2}"
std::string to_string(const SplittingPattern& pattern);
SplittingPattern parse_pattern(const std::string& text);

/// Precomputes disc(f) so sweeps over many primes stay cheap.
class PatternComputer {
public:
    explicit PatternComputer(IntPolynomial f);

    const IntPolynomial& polynomial() const { return f_; }
    const BigInt& discriminant() const { return disc_; }
    /// True when p divides disc(f) or lead(f), i.e. outside the contract.
    bool excluded(u64 p) const;
    /// Throws DomainError for excluded primes.
    SplittingPattern pattern(u64 p) const;

private:
    IntPolynomial f_;
    BigInt disc_;
};

SplittingPattern splitting_pattern(const IntPolynomial& f, u64 p);

}  // namespace cft
