#pragma once

// Quadratic orders O = Z[w], w = (D + sqrt(D))/2, and their elements.
//
// Every order uses the same basis [1, w] so that a single multiplication law
// applies: w^2 = D*w - (D^2 - D)/4.

#include "cft/arith.hpp"
#include "cft/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cft {

/// D = conductor^2 * fundamental.
struct Discriminant {
    i64 D = 0;
    i64 fundamental = 0;
    i64 conductor = 1;
    bool operator==(const Discriminant&) const = default;
};

bool is_fundamental_discriminant(i64 d);

/// Throws DomainError naming the violated condition.
Discriminant make_discriminant(i64 D);

class QuadOrder {
public:
    explicit QuadOrder(const Discriminant& disc);
    explicit QuadOrder(i64 D) : QuadOrder(make_discriminant(D)) {}

    const Discriminant& discriminant() const { return disc_; }
    i64 D() const { return disc_.D; }
    /// norm(w) = (D^2 - D)/4; trace(w) = D.
    i64 w_norm() const { return w_norm_; }
    i64 w_trace() const { return disc_.D; }
    bool is_maximal() const { return disc_.conductor == 1; }
    bool is_imaginary() const { return disc_.D < 0; }
    /// Squarefree m with K = Q(sqrt(m)).
    i64 squarefree_part() const { return m_; }
    /// s with sqrt(D) = s * sqrt(m).
    i64 sqrt_scale() const { return scale_; }

    bool operator==(const QuadOrder& other) const { return disc_ == other.disc_; }

private:
    Discriminant disc_;
    i64 w_norm_;
    i64 m_;
    i64 scale_;
};

/// (x + y*w) / denom with gcd(x, y, denom) = 1 and denom > 0.
class QuadElement {
public:
    QuadElement(const QuadOrder& order, BigInt x, BigInt y, BigInt denom = 1);
    static QuadElement from_integer(const QuadOrder& order, i64 n) { return {order, from_i64(n), 0}; }
    /// a + b*sqrt(m) with rational a, b.
    static QuadElement from_sqrt_form(const QuadOrder& order, const Rational& a, const Rational& b);

    const QuadOrder& order() const { return order_; }
    const BigInt& x() const { return x_; }
    const BigInt& y() const { return y_; }
    const BigInt& denom() const { return denom_; }

    bool is_integral() const { return denom_ == 1; }
    bool is_rational() const { return y_ == 0; }

    Rational norm() const;
    Rational trace() const;
    QuadElement conjugate() const;
    QuadElement inverse() const;

    /// Rational coordinates (a, b) with element = a + b*sqrt(m).
    std::pair<Rational, Rational> sqrt_coordinates() const;

    /// Value under the real embedding sqrt(m) -> +sqrt(m) (embedding 0) or
    /// -sqrt(m) (embedding 1). Real orders only.
    long double real_value(int embedding = 0) const;
    /// Sign of the real embedding, computed exactly.
    int real_sign(int embedding = 0) const;

    friend QuadElement operator+(const QuadElement& a, const QuadElement& b);
    friend QuadElement operator-(const QuadElement& a, const QuadElement& b);
    friend QuadElement operator*(const QuadElement& a, const QuadElement& b);
    friend QuadElement operator/(const QuadElement& a, const QuadElement& b);
    QuadElement operator-() const { return {order_, -x_, -y_, denom_}; }
    bool operator==(const QuadElement& other) const;

private:
    void normalize();

    QuadOrder order_;
    BigInt x_;
    BigInt y_;
    BigInt denom_;
};

QuadElement pow(const QuadElement& base, unsigned exponent);

/// "a + b*sqrt(m)"; parse_sqrt_form also accepts the middle dot.
std::string to_sqrt_form(const QuadElement& a);
QuadElement parse_sqrt_form(const QuadOrder& order, const std::string& text);
/// "(x, y; denom)" in basis [1, w].
std::string to_basis_form(const QuadElement& a);
QuadElement parse_basis_form(const QuadOrder& order, const std::string& text);

struct UnitGroup {
    int torsion_order = 2;
    std::optional<QuadElement> fundamental_unit;
};

/// Smallest unit > 1 under the real embedding, from the period of the
/// continued fraction of (b + sqrt(D))/2. Throws for D < 0.
QuadElement fundamental_unit(i64 D);

/// Torsion of the unit group of the order of discriminant D < 0.
UnitGroup unit_torsion(i64 D);
UnitGroup unit_group(i64 D);
/// The roots of unity of an imaginary order, in a fixed order starting with 1.
std::vector<QuadElement> torsion_units(const QuadOrder& order);

}  // namespace cft
