#pragma once

// Integer polynomials and dense polynomial arithmetic over F_p.

#include "cft/arith.hpp"
#include "cft/bigint.hpp"

#include <string>
#include <vector>

namespace cft {

/// Integer polynomial, coefficients from the constant term upward, no
/// trailing zeros (the zero polynomial has no coefficients).
struct IntPolynomial {
    std::vector<i64> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    i64 leading() const { return coeffs.empty() ? 0 : coeffs.back(); }
    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial make_polynomial(std::vector<i64> coeffs);

/// Parses "x^4+2x^2-7", "2*x^3 - x + 5", "-x^2+3". Variable is x.
IntPolynomial parse_polynomial(const std::string& text);
std::string to_string(const IntPolynomial& f);

BigInt evaluate(const IntPolynomial& f, const BigInt& x);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lead(f), exact.
BigInt discriminant(const IntPolynomial& f);

namespace fp {

/// Dense polynomial over F_p, low degree first, normalized (no trailing zeros).
using Poly = std::vector<u64>;

Poly reduce(const IntPolynomial& f, u64 p);
void normalize(Poly& f);
int degree(const Poly& f);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
/// Remainder of a modulo g (g nonzero).
Poly mod(const Poly& a, const Poly& g, u64 p);
/// Quotient of a by g (g nonzero), remainder discarded.
Poly div(const Poly& a, const Poly& g, u64 p);
Poly monic(const Poly& f, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
Poly derivative(const Poly& f, u64 p);
/// base^e mod g by repeated squaring.
Poly pow_mod(const Poly& base, u64 e, const Poly& g, u64 p);
u64 evaluate(const Poly& f, u64 x, u64 p);

bool is_squarefree(const Poly& f, u64 p);
/// True when f has a root in F_p (degree of gcd(f, x^p - x) > 0).
bool has_root(const Poly& f, u64 p);

/// Distinct-degree factorization of a squarefree polynomial: ascending
/// multiset of irreducible factor degrees.
std::vector<int> factor_degrees(const Poly& f, u64 p);

}  // namespace fp

}  // namespace cft
