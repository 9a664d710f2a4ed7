#pragma once

// Binary quadratic forms a*x^2 + b*x*y + c*y^2 of negative discriminant.

#include "cft/arith.hpp"
#include "cft/polynomial.hpp"
#include "cft/quadfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cft {

struct BinaryQuadraticForm {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    i64 discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    bool is_positive_definite() const { return discriminant() < 0 && a > 0; }
    /// |b| <= a <= c, and b >= 0 when |b| = a or a = c.
    bool is_reduced() const;
    i128 evaluate(i64 x, i64 y) const {
        return static_cast<i128>(a) * x * x + static_cast<i128>(b) * x * y + static_cast<i128>(c) * y * y;
    }
    auto operator<=>(const BinaryQuadraticForm&) const = default;
};

std::string to_string(const BinaryQuadraticForm& f);

/// Integer matrix [[p, q], [r, s]] of determinant 1; F'(x, y) = F(p x + q y, r x + s y).
struct SL2Z {
    i64 p = 1, q = 0, r = 0, s = 1;
    bool operator==(const SL2Z&) const = default;
};

BinaryQuadraticForm apply(const BinaryQuadraticForm& f, const SL2Z& m);

struct Reduction {
    BinaryQuadraticForm form;
    SL2Z transform;  // form = apply(input, transform)
};

/// x^2 - (D/4) y^2 or x^2 + x y + ((1 - D)/4) y^2 by the parity of D.
BinaryQuadraticForm principal_form(const Discriminant& disc);
BinaryQuadraticForm principal_form(i64 D);

/// Gauss reduction of a positive definite primitive form.
Reduction reduce_form_with_transform(const BinaryQuadraticForm& f);
BinaryQuadraticForm reduce_form(const BinaryQuadraticForm& f);

struct ClassNumberResult {
    i64 h = 0;
    /// Sorted by a, then |b|, then positive b before negative.
    std::vector<BinaryQuadraticForm> forms;
};

ClassNumberResult class_number_neg(i64 D);

/// Position of a reduced form in class_number_neg(D).forms.
std::size_t class_index(const ClassNumberResult& classes, const BinaryQuadraticForm& reduced);

struct RepresentationWitness {
    i64 x = 0;
    i64 y = 0;
    i64 value = 0;
};

/// Writes p = Q_D(x, y) for the principal form; nullopt when impossible.
/// Cornacchia when (D/p) = 1 and D = 0 mod 4, otherwise search over |y| <= sqrt(4p/|D|).
std::optional<RepresentationWitness> represent_prime(u64 p, i64 D);
/// The exhaustive search path alone (used to cross-check Cornacchia).
std::optional<RepresentationWitness> represent_prime_by_search(u64 p, i64 D);

struct CriterionResult {
    bool represented = false;
    bool criterion = false;
    bool agree = false;
    std::optional<RepresentationWitness> witness;
};

/// Compares "p = Q_D(x, y)" with "(D/p) = 1 and g has a root mod p".
/// Precomputes h(D) and disc(g) once so sweeps stay cheap.
class CriterionChecker {
public:
    CriterionChecker(i64 D, std::optional<IntPolynomial> g);

    /// p = 2, p | D, p | disc(g) or p | lead(g): outside the statement.
    bool excluded(u64 p) const;
    /// Throws DomainError for excluded primes.
    CriterionResult check(u64 p) const;

    i64 discriminant() const { return D_; }
    i64 class_number() const { return h_; }
    const std::optional<IntPolynomial>& polynomial() const { return g_; }
    const std::optional<BigInt>& polynomial_discriminant() const { return g_disc_; }

private:
    i64 D_;
    i64 h_;
    std::optional<IntPolynomial> g_;
    std::optional<BigInt> g_disc_;
};

CriterionResult criterion_check(u64 p, i64 D, const std::optional<IntPolynomial>& g);

}  // namespace cft
