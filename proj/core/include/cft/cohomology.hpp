#pragma once

// Tate cohomology of a finitely generated abelian group A = Z^k / L with an
// action of G = <sigma> of order n: H^0 = ker(Delta)/N(A), H^1 = ker(N)/Delta(A),
// Delta = 1 - sigma, N = 1 + sigma + ... + sigma^(n-1).

#include "cft/bigint.hpp"
#include "cft/intmatrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cft {

struct CyclicModule {
    unsigned n = 1;
    /// k x r; its columns generate L.
    IntMatrix relations;
    /// k x k matrix of sigma.
    IntMatrix action;

    std::size_t rank() const { return action.rows(); }
};

/// Checks M L in L and M^n = 1 on A; throws DomainError naming the failure.
void validate(const CyclicModule& a);

/// A structure d_1 x d_2 x ... x Z^free with d_i the Smith invariants > 1.
struct AbelianGroupShape {
    std::vector<BigInt> torsion;
    std::size_t free_rank = 0;
    bool is_finite() const { return free_rank == 0; }
    /// Order, or nullopt when infinite.
    std::optional<BigInt> order() const;
};

std::string to_string(const AbelianGroupShape& g);

struct HerbrandResult {
    AbelianGroupShape h0;
    AbelianGroupShape h1;
    /// |H^1| / |H^0| when both are finite.
    std::optional<Rational> q;
};

HerbrandResult herbrand_components(const CyclicModule& a);

/// Z^d with sigma the cyclic shift e_i -> e_{i+1}; requires d | n.
CyclicModule build_permutation_module(unsigned n, unsigned d);
/// Z^k/L with trivial action.
CyclicModule trivial_module(unsigned n, const IntMatrix& relations);
CyclicModule direct_sum(const CyclicModule& a, const CyclicModule& b);
/// The same module written in the coordinates x -> P x for unimodular P.
CyclicModule change_basis(const CyclicModule& a, const IntMatrix& P, const IntMatrix& P_inverse);

/// A finite module built from diagonal blocks, and the same module in random
/// coordinates. The diagonal description keeps enumeration oracles simple.
struct RandomFiniteModule {
    /// Cyclic orders of the diagonal coordinates.
    std::vector<std::int64_t> orders;
    /// Action in diagonal coordinates.
    IntMatrix diagonal_action;
    /// The module as handed to herbrand_components.
    CyclicModule module;
};

/// |A| <= max_order, n <= max_n.
RandomFiniteModule random_finite_module(std::mt19937_64& rng, std::int64_t max_order = 10'000, unsigned max_n = 6);

}  // namespace cft
