#pragma once

// Integral ideals of a maximal quadratic order in Hermite normal form.

#include "cft/arith.hpp"
#include "cft/forms.hpp"
#include "cft/quadfield.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cft {

/// The Z-module a*Z + (b + c*w)*Z with c | a, c | b, 0 <= b < a, closed under
/// multiplication by w. Norm is a*c.
class QuadIdeal {
public:
    /// Validates the HNF and ideal conditions; throws DomainError otherwise.
    QuadIdeal(const QuadOrder& order, i64 a, i64 b, i64 c);

    const QuadOrder& order() const { return order_; }
    i64 a() const { return a_; }
    i64 b() const { return b_; }
    i64 c() const { return c_; }
    i64 norm() const { return a_ * c_; }

    /// Membership of x + y*w.
    bool contains(i64 x, i64 y) const;
    bool contains(const QuadElement& alpha) const;
    /// this ⊆ other
    bool is_contained_in(const QuadIdeal& other) const;

    bool operator==(const QuadIdeal& other) const {
        return order_ == other.order_ && a_ == other.a_ && b_ == other.b_ && c_ == other.c_;
    }

private:
    QuadOrder order_;
    i64 a_;
    i64 b_;
    i64 c_;
};

/// "[a, b + c*w]"
std::string to_string(const QuadIdeal& ideal);

QuadIdeal unit_ideal(const QuadOrder& order);
/// The ideal generated by integral elements x_i + y_i*w.
QuadIdeal ideal_from_generators(const QuadOrder& order, const std::vector<std::pair<i64, i64>>& generators);
QuadIdeal principal_ideal(const QuadElement& alpha);
QuadIdeal ideal_mul(const QuadIdeal& a, const QuadIdeal& b);
QuadIdeal ideal_pow(const QuadIdeal& a, unsigned k);
QuadIdeal conjugate(const QuadIdeal& ideal);
inline i64 ideal_norm(const QuadIdeal& ideal) { return ideal.norm(); }

enum class SplittingKind { Split, Inert, Ramified };
std::string to_string(SplittingKind kind);

/// (e, f, r) with e*f*r = 2.
struct SplittingType {
    SplittingKind kind = SplittingKind::Split;
    int e = 1;
    int f = 1;
    int r = 2;
};

struct PrimeDecomposition {
    SplittingType type;
    /// Distinct primes above p (conjugate pair, (p), or the ramified prime).
    std::vector<QuadIdeal> primes;
};

PrimeDecomposition decompose_prime(u64 p, i64 fundamental_discriminant);

/// Prime ideal factorization (prime, exponent), ordered by norm then HNF.
std::vector<std::pair<QuadIdeal, unsigned>> factor_ideal(const QuadIdeal& ideal);

/// |(O/a)*| = N(a) * prod_{p | a} (1 - 1/N(p)).
i64 residue_unit_count(const QuadIdeal& ideal);

/// Binary form N(x*a' + y*(b' + w))/a' attached to the primitive part [a', b' + w].
BinaryQuadraticForm ideal_form(const QuadIdeal& ideal);

/// A generator when the ideal is principal (imaginary fields only).
std::optional<QuadElement> is_principal_imaginary(const QuadIdeal& ideal);

struct EnumerationOptions {
    u64 cap = 10'000'000;
    unsigned workers = 1;
};

struct IdealEntry {
    QuadIdeal ideal;
    std::size_t class_index;
};

/// Every integral ideal of norm <= X, ordered by (norm, a, b, c), labeled by
/// the position of its reduced form in class_number_neg(d_K).
std::vector<IdealEntry> enumerate_ideals_up_to_norm(i64 fundamental_discriminant, u64 X,
                                                    const EnumerationOptions& options = {});

/// j(X, class) for every ideal class, without materializing the ideals.
std::vector<u64> count_ideals_by_class(i64 fundamental_discriminant, u64 X, const EnumerationOptions& options = {});

/// TSV with columns norm, a, b, c, class.
void write_ideals_tsv(std::ostream& out, const std::vector<IdealEntry>& entries);

}  // namespace cft
