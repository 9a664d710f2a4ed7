#pragma once

// Finite-precision elements of Q_p: p^v * u with u a unit known mod p^N.

#include "cft/arith.hpp"
#include "cft/bigint.hpp"

#include <optional>
#include <string>

namespace cft {

inline constexpr int kDefaultPadicPrecision = 20;

class PadicNumber {
public:
    /// Zero known to absolute precision O(p^absolute_precision).
    static PadicNumber zero(u64 p, int absolute_precision);
    /// p^valuation * unit with unit reduced mod p^precision; unit must be coprime to p.
    static PadicNumber from_parts(u64 p, int valuation, BigInt unit, int precision);
    static PadicNumber from_rational(const Rational& q, u64 p, int precision = kDefaultPadicPrecision);
    static PadicNumber from_integer(i64 n, u64 p, int precision = kDefaultPadicPrecision);

    u64 prime() const { return p_; }
    bool is_zero() const { return !valuation_.has_value(); }
    /// Throws DomainError for zero.
    int valuation() const;
    const BigInt& unit() const { return unit_; }
    /// Relative precision N (digits of the unit); 0 for zero.
    int precision() const { return is_zero() ? 0 : precision_; }
    int absolute_precision() const { return is_zero() ? precision_ : *valuation_ + precision_; }
    /// A rational representative p^v * unit.
    Rational to_rational() const;

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    /// Equal within the smaller of the two absolute precisions.
    bool agrees_with(const PadicNumber& other) const;

private:
    PadicNumber(u64 p, std::optional<int> valuation, BigInt unit, int precision)
        : p_(p), valuation_(valuation), unit_(std::move(unit)), precision_(precision) {}

    u64 p_;
    std::optional<int> valuation_;
    BigInt unit_;
    int precision_;  // relative precision, or absolute precision for zero
};

/// "5^1 * 16 + O(5^21)", "O(5^20)" for zero.
std::string to_string(const PadicNumber& x);

BigInt prime_power(u64 p, int k);

/// Sum x^n/n!. Requires v_p(x) >= 1 (p odd) or >= 2 (p = 2).
PadicNumber padic_exp(const PadicNumber& x);
/// Sum (-1)^(n+1) (u-1)^n/n. Requires u = 1 (mod p).
PadicNumber padic_log(const PadicNumber& u);

/// Whether the unit u is an n-th power in Q_p, decided mod p^m with
/// m = v_p(n) + 1 (p odd) or v_2(n) + 2 (p = 2).
bool is_nth_power_unit(const PadicNumber& u, u64 n);

/// Square root to the requested relative precision (capped by what the input
/// supports), or nullopt when a is not a square in Q_p.
std::optional<PadicNumber> hensel_sqrt(const PadicNumber& a, int target_precision = kDefaultPadicPrecision);

}  // namespace cft
