#include "cft/hilbert.hpp"

#include "cft/error.hpp"
#include "cft/padic.hpp"

#include <map>
#include <set>

namespace cft {

namespace {

struct LocalParts {
    int alpha;   // v_p(a)
    u64 unit;    // unit part mod p (odd p) or mod 8 (p = 2)
};

LocalParts local_parts(const Rational& q, u64 p) {
    if (q == 0) throw DomainError("Hilbert symbol arguments must be nonzero");
    const BigInt bp = from_u64(p);
    const int alpha = valuation(q, bp);
    BigInt pa;
    mpz_pow_ui(pa.get_mpz_t(), bp.get_mpz_t(), static_cast<unsigned long>(std::abs(alpha)));
    Rational unit = q;
    if (alpha > 0) unit /= Rational(pa);
    if (alpha < 0) unit *= Rational(pa);
    unit.canonicalize();
    const u64 m = p == 2 ? 8 : p;
    return {alpha, rational_mod(unit, from_u64(m)).get_ui()};
}

int sign_pow(u64 e) { return e % 2 == 0 ? 1 : -1; }

// Square-class data of a nonzero rational at p for the search: valuation
// parity and the unit part mod p^k.
struct Reduced {
    int alpha;
    BigInt unit;
};

Reduced reduce_for_search(const Rational& q, u64 p, const BigInt& pk) {
    if (q == 0) throw DomainError("Hilbert symbol arguments must be nonzero");
    const BigInt bp = from_u64(p);
    const int alpha = valuation(q, bp);
    BigInt pa;
    mpz_pow_ui(pa.get_mpz_t(), bp.get_mpz_t(), static_cast<unsigned long>(std::abs(alpha)));
    Rational unit = q;
    if (alpha > 0) unit /= Rational(pa);
    if (alpha < 0) unit *= Rational(pa);
    unit.canonicalize();
    // Even powers of p are squares; keep only the parity.
    return {((alpha % 2) + 2) % 2, rational_mod(unit, pk)};
}

}  // namespace

std::string to_string(const Place& v) { return v.is_infinite() ? "inf" : std::to_string(v.prime); }

Place parse_place(const std::string& text) {
    if (text == "inf" || text == "oo" || text == "∞" || text == "infinity") return kInfinity;
    try {
        std::size_t used = 0;
        const long long p = std::stoll(text, &used);
        if (used != text.size() || p < 2) throw ParseError("");
        if (!is_prime(static_cast<u64>(p))) throw DomainError("place " + text + " is not prime");
        return Place{static_cast<u64>(p)};
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad place '" + text + "' (expected a prime or 'inf')");
    }
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol arguments must be nonzero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    const u64 p = v.prime;
    if (!is_prime(p)) throw DomainError("Hilbert symbol place " + std::to_string(p) + " is not prime");
    const LocalParts A = local_parts(a, p);
    const LocalParts B = local_parts(b, p);
    const u64 al = static_cast<u64>(((A.alpha % 2) + 2) % 2);
    const u64 be = static_cast<u64>(((B.alpha % 2) + 2) % 2);
    if (p != 2) {
        // (-1)^(alpha beta (p-1)/2) (u/p)^beta (w/p)^alpha
        int s = sign_pow(al * be * ((p - 1) / 2));
        if (be) s *= kronecker_symbol(static_cast<i64>(A.unit), static_cast<i64>(p));
        if (al) s *= kronecker_symbol(static_cast<i64>(B.unit), static_cast<i64>(p));
        return s;
    }
    // (-1)^(eps(u) eps(w) + alpha omega(w) + beta omega(u))
    auto eps = [](u64 u) { return ((u - 1) / 2) % 2; };
    auto omega = [](u64 u) { return ((u * u - 1) / 8) % 2; };
    return sign_pow(eps(A.unit) * eps(B.unit) + al * omega(B.unit) + be * omega(A.unit));
}

HilbertProduct hilbert_product(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw DomainError("Hilbert symbol arguments must be nonzero");
    std::set<u64> primes{2};
    for (const Rational* q : {&a, &b}) {
        for (const mpz_srcptr part : {q->get_num_mpz_t(), q->get_den_mpz_t()}) {
            BigInt n(part);
            if (n < 0) n = -n;
            if (n <= 1) continue;
            if (!n.fits_slong_p()) throw LimitError("hilbert_product: argument too large to factor");
            for (const auto& pp : factorize(n.get_si()).factors) primes.insert(pp.prime);
        }
    }
    HilbertProduct out;
    for (u64 p : primes) {
        const int s = hilbert_symbol(a, b, Place{p});
        out.symbols.emplace_back(Place{p}, s);
        out.product *= s;
    }
    const int s_inf = hilbert_symbol(a, b, kInfinity);
    out.symbols.emplace_back(kInfinity, s_inf);
    out.product *= s_inf;
    return out;
}

int hilbert_symbol_search(const Rational& a, const Rational& b, u64 p) {
    if (!is_prime(p)) throw DomainError("hilbert_symbol_search: " + std::to_string(p) + " is not prime");
    const int k = p == 2 ? 7 : 3;
    const int unit_digits = p == 2 ? 3 : 1;  // digits that decide whether a unit is a square
    const BigInt pk = prime_power(p, k);
    const u64 mod = pk.get_ui();
    const Reduced A = reduce_for_search(a, p, pk);
    const Reduced B = reduce_for_search(b, p, pk);
    const u64 ca = (A.alpha ? p : 1) * A.unit.get_ui() % mod;
    const u64 cb = (B.alpha ? p : 1) * B.unit.get_ui() % mod;

    const u64 unit_mod = p == 2 ? 8 : p;
    std::set<u64> unit_squares;
    for (u64 y = 1; y < unit_mod; ++y) {
        if (y % p != 0) unit_squares.insert(y * y % unit_mod);
    }
    auto visibly_square = [&](u64 t) {
        if (t == 0) return false;
        int s = 0;
        while (t % p == 0) {
            t /= p;
            ++s;
        }
        if (s % 2 != 0 || s + unit_digits > k) return false;
        return unit_squares.count(t % unit_mod) > 0;
    };
    auto value = [&](u64 x, u64 y) {
        const u128 t = static_cast<u128>(ca) * x % mod * x + static_cast<u128>(cb) * y % mod * y;
        return static_cast<u64>(t % mod);
    };
    // Primitive (x, y) up to unit scaling: (1, y) and (p x', 1).
    for (u64 y = 0; y < mod; ++y) {
        if (visibly_square(value(1, y))) return 1;
    }
    for (u64 x = 0; x < mod; x += p) {
        if (visibly_square(value(x, 1))) return 1;
    }
    return -1;
}

std::vector<i64> square_class_representatives(const Place& v) {
    if (v.is_infinite()) return {1, -1};
    const u64 p = v.prime;
    if (p == 2) return {1, 3, 5, 7, 2, 6, 10, 14};
    u64 e = 2;
    while (kronecker_symbol(static_cast<i64>(e), static_cast<i64>(p)) != -1) ++e;
    const i64 ip = static_cast<i64>(p), ie = static_cast<i64>(e);
    return {1, ie, ip, ie * ip};
}

}  // namespace cft
