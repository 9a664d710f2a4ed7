#pragma once

// Moduli, mod* congruence, weak approximation over Q, unit indices and the
// ray class number formula h_m = 2^s * phi(m0) * h / [U : U_m].

#include "cft/arith.hpp"
#include "cft/bigint.hpp"
#include "cft/ideals.hpp"
#include "cft/quadfield.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cft {

/// A modulus m = m0 * m_inf over Q (order empty) or a maximal quadratic order.
struct Modulus {
    std::optional<QuadOrder> order;
    /// Over Q: p -> m_p, sorted by p.
    std::vector<PrimePower> rational_part;
    /// Over a quadratic field: prime ideal -> exponent.
    std::vector<std::pair<QuadIdeal, unsigned>> ideal_part;
    /// Real places in the modulus: {0} for Q; a subset of {0, 1} for real
    /// quadratic fields (embedding sqrt(m) -> +sqrt(m), resp. -sqrt(m)).
    std::vector<int> real_places;

    bool is_rational() const { return !order.has_value(); }
    bool has_place(int place) const;
};

/// (m) * inf if infinite; m >= 1.
Modulus rational_modulus(i64 m, bool infinite);
/// "1", "5", "5*inf", "2^3*3*inf", "inf".
Modulus parse_rational_modulus(const std::string& text);
/// m0 given as an ideal of a maximal order; places must be real.
Modulus quadratic_modulus(const QuadIdeal& m0, std::vector<int> real_places = {});
std::string to_string(const Modulus& m);

/// Exponent of p in a rational modulus (0 when absent).
unsigned exponent_at(const Modulus& m, u64 p);
/// The finite part as an integer (Q) or as an ideal (quadratic).
i64 rational_finite_part(const Modulus& m);
QuadIdeal ideal_finite_part(const Modulus& m);

Modulus modulus_gcd(const Modulus& a, const Modulus& b);
Modulus modulus_lcm(const Modulus& a, const Modulus& b);

/// x = y (mod* m): v_p(x/y - 1) >= m_p at every p | m and matching signs at
/// the infinite place. Rational moduli only; x, y nonzero.
bool congruent_mod_star(const Rational& x, const Rational& y, const Modulus& m);

/// An x with x = y (mod* m) and x = z (mod* m'). Throws DomainError naming the
/// place where y and z disagree modulo gcd(m, m').
Rational weak_approx_q(const Rational& y, const Rational& z, const Modulus& m, const Modulus& m_prime);

struct UnitIndexOptions {
    u64 iteration_cap = 1'000'000;
};

/// [U_K : U_m].
i64 unit_index(const Modulus& m, const UnitIndexOptions& options = {});

enum class ClassNumberSource { Rational, Forms, Supplied };
std::string to_string(ClassNumberSource source);

struct RayClassReport {
    i64 h_m = 1;
    i64 two_power_s = 1;
    i64 norm_m0 = 1;
    /// prod_{p | m0} (1 - 1/N(p))
    Rational euler_factor = 1;
    i64 unit_index = 1;
    i64 h = 1;
    ClassNumberSource h_source = ClassNumberSource::Rational;
};

/// supplied_h is required for real quadratic fields and ignored otherwise.
RayClassReport ray_class_number(const Modulus& m, std::optional<i64> supplied_h = std::nullopt,
                                const UnitIndexOptions& options = {});

/// |I(m)/P_m| over Q by direct enumeration: ideals (a), 1 <= a <= m0 coprime
/// to m0, identified when a/b or -a/b is = 1 (mod* m).
i64 ray_class_count_bruteforce_q(const Modulus& m);

}  // namespace cft
