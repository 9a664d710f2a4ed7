#include "cft/cohomology.hpp"

#include "cft/arith.hpp"
#include "cft/error.hpp"

#include <numeric>
#include <sstream>

namespace cft {

namespace {

IntMatrix norm_map(const CyclicModule& a) {
    const std::size_t k = a.rank();
    IntMatrix sum(k, k);
    IntMatrix power = IntMatrix::identity(k);
    for (unsigned i = 0; i < a.n; ++i) {
        sum = sum + power;
        power = power * a.action;
    }
    return sum;
}

// K / (span(image) + L) where K = {x : f x in L}.
AbelianGroupShape cohomology_group(const IntMatrix& f, const IntMatrix& image, const IntMatrix& relations) {
    const std::size_t k = f.rows();
    // x with f x = R y for some y: kernel of [f | -R], projected to x.
    IntMatrix neg_r = relations;
    for (std::size_t r = 0; r < neg_r.rows(); ++r) {
        for (std::size_t c = 0; c < neg_r.cols(); ++c) neg_r.at(r, c) = -neg_r.at(r, c);
    }
    const IntMatrix kernel = integer_kernel(f.hconcat(neg_r)).top_rows(k);
    const IntMatrix K = lattice_basis(kernel);
    const IntMatrix denominators = image.hconcat(relations);

    AbelianGroupShape out;
    if (K.cols() == 0) return out;
    IntMatrix coords(K.cols(), denominators.cols());
    for (std::size_t c = 0; c < denominators.cols(); ++c) {
        const auto y = lattice_coordinates(K, denominators.column(c));
        if (!y) throw DomainError("cohomology: image does not lie in the kernel (module invariants violated)");
        for (std::size_t r = 0; r < K.cols(); ++r) coords.at(r, c) = (*y)[r];
    }
    const std::vector<BigInt> inv = smith_invariants(coords);
    out.free_rank = K.cols() - inv.size();
    for (const BigInt& d : inv) {
        if (d != 1) out.torsion.push_back(d);
    }
    return out;
}

i64 uniform(std::mt19937_64& rng, i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); }

}  // namespace

void validate(const CyclicModule& a) {
    const std::size_t k = a.rank();
    if (a.n < 1) throw DomainError("cyclic group order must be >= 1");
    if (a.action.cols() != k) throw DomainError("action matrix must be square");
    if (a.relations.rows() != k) throw DomainError("relation matrix must have one row per generator");
    const IntMatrix moved = a.action * a.relations;
    for (std::size_t c = 0; c < moved.cols(); ++c) {
        if (!in_lattice(a.relations, moved.column(c))) {
            throw DomainError("action does not preserve the relation lattice (column " + std::to_string(c) + ")");
        }
    }
    const IntMatrix diff = matrix_power(a.action, a.n) - IntMatrix::identity(k);
    for (std::size_t c = 0; c < k; ++c) {
        if (!in_lattice(a.relations, diff.column(c))) {
            throw DomainError("sigma^" + std::to_string(a.n) + " is not the identity on A (generator " +
                              std::to_string(c) + ")");
        }
    }
}

std::optional<BigInt> AbelianGroupShape::order() const {
    if (!is_finite()) return std::nullopt;
    BigInt out = 1;
    for (const BigInt& d : torsion) out *= d;
    return out;
}

std::string to_string(const AbelianGroupShape& g) {
    std::ostringstream out;
    bool first = true;
    for (const BigInt& d : g.torsion) {
        out << (first ? "" : " x ") << "Z/" << d.get_str();
        first = false;
    }
    for (std::size_t i = 0; i < g.free_rank; ++i) {
        out << (first ? "" : " x ") << "Z";
        first = false;
    }
    return first ? "0" : out.str();
}

HerbrandResult herbrand_components(const CyclicModule& a) {
    validate(a);
    const std::size_t k = a.rank();
    const IntMatrix delta = IntMatrix::identity(k) - a.action;
    const IntMatrix norm = norm_map(a);
    HerbrandResult out;
    out.h0 = cohomology_group(delta, norm, a.relations);
    out.h1 = cohomology_group(norm, delta, a.relations);
    const auto o0 = out.h0.order(), o1 = out.h1.order();
    if (o0 && o1) {
        Rational q(*o1, *o0);
        q.canonicalize();
        out.q = q;
    }
    return out;
}

CyclicModule build_permutation_module(unsigned n, unsigned d) {
    if (d == 0 || n == 0 || n % d != 0) {
        throw DomainError("permutation module needs an orbit size d dividing n (got n=" + std::to_string(n) +
                          ", d=" + std::to_string(d) + ")");
    }
    CyclicModule a;
    a.n = n;
    a.relations = IntMatrix(d, 0);
    a.action = IntMatrix(d, d);
    for (unsigned i = 0; i < d; ++i) a.action.at((i + 1) % d, i) = 1;
    return a;
}

CyclicModule trivial_module(unsigned n, const IntMatrix& relations) {
    return {n, relations, IntMatrix::identity(relations.rows())};
}

CyclicModule direct_sum(const CyclicModule& a, const CyclicModule& b) {
    if (a.n != b.n) {
        throw DomainError("direct_sum: acting groups differ (n=" + std::to_string(a.n) + " vs " +
                          std::to_string(b.n) + ")");
    }
    return {a.n, block_diagonal(a.relations, b.relations), block_diagonal(a.action, b.action)};
}

CyclicModule change_basis(const CyclicModule& a, const IntMatrix& P, const IntMatrix& P_inverse) {
    return {a.n, P * a.relations, P * a.action * P_inverse};
}

RandomFiniteModule random_finite_module(std::mt19937_64& rng, std::int64_t max_order, unsigned max_n) {
    const unsigned n = static_cast<unsigned>(uniform(rng, 1, max_n));
    std::vector<std::int64_t> orders;
    std::vector<IntMatrix> blocks;
    std::int64_t total = 1;
    const int block_count = static_cast<int>(uniform(rng, 1, 3));
    for (int b = 0; b < block_count; ++b) {
        const std::int64_t budget = max_order / total;
        if (budget < 2) break;
        if (uniform(rng, 0, 1) == 0) {
            // (Z/m)^s with sigma permuting coordinates cyclically, s | n.
            std::vector<unsigned> divisors;
            for (unsigned s = 1; s <= n; ++s) {
                if (n % s == 0) divisors.push_back(s);
            }
            const unsigned s = divisors[static_cast<std::size_t>(uniform(rng, 0, static_cast<i64>(divisors.size()) - 1))];
            std::int64_t m_max = 1;
            while (true) {
                std::int64_t pw = 1;
                bool fits = true;
                for (unsigned i = 0; i < s; ++i) {
                    pw *= m_max + 1;
                    if (pw > budget) {
                        fits = false;
                        break;
                    }
                }
                if (!fits) break;
                ++m_max;
            }
            if (m_max < 2) continue;
            const std::int64_t m = uniform(rng, 2, std::min<std::int64_t>(m_max, 60));
            IntMatrix shift(s, s);
            for (unsigned i = 0; i < s; ++i) shift.at((i + 1) % s, i) = 1;
            for (unsigned i = 0; i < s; ++i) {
                orders.push_back(m);
                total *= m;
            }
            blocks.push_back(shift);
        } else {
            // Z/m with sigma acting by a unit u, u^n = 1 mod m.
            const std::int64_t m = uniform(rng, 2, std::min<std::int64_t>(budget, 400));
            std::vector<std::int64_t> units;
            for (std::int64_t u = 1; u < m; ++u) {
                if (std::gcd(u, m) == 1 && pow_mod(static_cast<u64>(u), n, static_cast<u64>(m)) == 1 % static_cast<u64>(m)) {
                    units.push_back(u);
                }
            }
            const std::int64_t u = units.empty() ? 1 : units[static_cast<std::size_t>(uniform(rng, 0, static_cast<i64>(units.size()) - 1))];
            IntMatrix block(1, 1);
            block.at(0, 0) = static_cast<long>(u);
            orders.push_back(m);
            total *= m;
            blocks.push_back(block);
        }
    }
    if (orders.empty()) {
        orders.push_back(2);
        IntMatrix block(1, 1);
        block.at(0, 0) = 1;
        blocks.push_back(block);
    }
    const std::size_t k = orders.size();
    IntMatrix action(0, 0);
    for (const IntMatrix& b : blocks) action = block_diagonal(action, b);
    IntMatrix relations(k, k);
    for (std::size_t i = 0; i < k; ++i) relations.at(i, i) = static_cast<long>(orders[i]);

    // Random unimodular P as a product of elementary moves, with its inverse.
    IntMatrix P = IntMatrix::identity(k), P_inv = IntMatrix::identity(k);
    if (k > 1) {
        const int moves = static_cast<int>(uniform(rng, 1, 6));
        for (int t = 0; t < moves; ++t) {
            const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<i64>(k) - 1));
            auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<i64>(k) - 2));
            if (j >= i) ++j;
            const long c = static_cast<long>(uniform(rng, -3, 3));
            IntMatrix E = IntMatrix::identity(k), E_inv = IntMatrix::identity(k);
            E.at(i, j) = c;
            E_inv.at(i, j) = -c;
            P = E * P;
            P_inv = P_inv * E_inv;
        }
    }
    RandomFiniteModule out;
    out.orders = orders;
    out.diagonal_action = action;
    out.module = change_basis(CyclicModule{n, relations, action}, P, P_inv);
    return out;
}

}  // namespace cft
