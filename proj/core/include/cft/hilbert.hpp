#pragma once

// Quadratic Hilbert symbols over Q and the product formula.

#include "cft/arith.hpp"
#include "cft/bigint.hpp"

#include <string>
#include <vector>

namespace cft {

/// A place of Q: a prime, or infinity (prime == 0).
struct Place {
    u64 prime = 0;
    bool is_infinite() const { return prime == 0; }
    bool operator==(const Place&) const = default;
    auto operator<=>(const Place&) const = default;
};

inline constexpr Place kInfinity{0};

std::string to_string(const Place& v);
/// "inf", "oo" or a prime.
Place parse_place(const std::string& text);

/// (a, b)_v in {-1, +1}: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution
/// over Q_v. Closed-form case split on valuations and unit residues.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

struct HilbertProduct {
    /// Symbols at infinity and at every prime dividing 2ab, ordered with
    /// infinity last. Every other place contributes +1.
    std::vector<std::pair<Place, int>> symbols;
    int product = 1;
};

HilbertProduct hilbert_product(const Rational& a, const Rational& b);

/// (a, b)_p decided by searching primitive (x, y) mod p^k for which
/// a x^2 + b y^2 is visibly a nonzero square; independent of the formulas.
int hilbert_symbol_search(const Rational& a, const Rational& b, u64 p);

/// Square-class representatives of Q_v^* / Q_v^*2 as integers:
/// {1, e, p, e p} for odd p (e the least non-residue), {1, 3, 5, 7, 2, 6, 10, 14}
/// for p = 2, {1, -1} at infinity.
std::vector<i64> square_class_representatives(const Place& v);

}  // namespace cft
