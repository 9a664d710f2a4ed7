#include "cft/padic.hpp"

#include "cft/error.hpp"

#include <algorithm>
#include <sstream>

namespace cft {

namespace {

BigInt inverse_mod_big(const BigInt& a, const BigInt& m) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw DomainError("p-adic unit is not invertible");
    }
    return inv;
}

BigInt mod_big(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Splits off the p-part: returns (w, s / p^w).
std::pair<int, BigInt> split_p(const BigInt& s, u64 p) {
    BigInt rest;
    const BigInt bp = from_u64(p);
    const auto w = static_cast<int>(mpz_remove(rest.get_mpz_t(), s.get_mpz_t(), bp.get_mpz_t()));
    return {w, rest};
}

void require_prime(u64 p) {
    if (!is_prime(p)) throw DomainError("p-adic prime " + std::to_string(p) + " is not prime");
}

// floor(log_p n)
int floor_log(u64 n, u64 p) {
    int k = 0;
    while (n >= p) {
        n /= p;
        ++k;
    }
    return k;
}

}  // namespace

BigInt prime_power(u64 p, int k) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(std::max(k, 0)));
    return out;
}

PadicNumber PadicNumber::zero(u64 p, int absolute_precision) {
    require_prime(p);
    return PadicNumber(p, std::nullopt, 0, absolute_precision);
}

PadicNumber PadicNumber::from_parts(u64 p, int valuation, BigInt unit, int precision) {
    require_prime(p);
    if (precision < 1) throw DomainError("p-adic relative precision must be >= 1");
    const BigInt bp = from_u64(p);
    if (mpz_divisible_p(unit.get_mpz_t(), bp.get_mpz_t()) != 0) {
        throw DomainError("p-adic unit part " + unit.get_str() + " is divisible by " + std::to_string(p));
    }
    return PadicNumber(p, valuation, mod_big(unit, prime_power(p, precision)), precision);
}

PadicNumber PadicNumber::from_rational(const Rational& q, u64 p, int precision) {
    require_prime(p);
    if (precision < 1) throw DomainError("p-adic precision must be >= 1");
    if (q == 0) return zero(p, precision);
    const int v = cft::valuation(q, from_u64(p));
    Rational unit = q;
    if (v > 0) unit /= Rational(prime_power(p, v));
    if (v < 0) unit *= Rational(prime_power(p, -v));
    unit.canonicalize();
    return from_parts(p, v, rational_mod(unit, prime_power(p, precision)), precision);
}

PadicNumber PadicNumber::from_integer(i64 n, u64 p, int precision) {
    return from_rational(Rational(from_i64(n)), p, precision);
}

int PadicNumber::valuation() const {
    if (is_zero()) throw DomainError("the valuation of p-adic zero is infinite");
    return *valuation_;
}

Rational PadicNumber::to_rational() const {
    if (is_zero()) return 0;
    Rational out(unit_);
    if (*valuation_ >= 0) out *= Rational(prime_power(p_, *valuation_));
    else out /= Rational(prime_power(p_, -*valuation_));
    out.canonicalize();
    return out;
}

PadicNumber PadicNumber::operator-() const {
    if (is_zero()) return *this;
    return PadicNumber(p_, valuation_, mod_big(-unit_, prime_power(p_, precision_)), precision_);
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_) throw DomainError("p-adic numbers over different primes");
    const int A = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.is_zero() && b.is_zero()) return PadicNumber::zero(a.p_, A);
    if (a.is_zero() || b.is_zero()) {
        const PadicNumber& x = a.is_zero() ? b : a;
        if (A <= x.valuation()) return PadicNumber::zero(a.p_, A);
        return PadicNumber::from_parts(a.p_, x.valuation(), x.unit_, A - x.valuation());
    }
    const int vmin = std::min(a.valuation(), b.valuation());
    if (A <= vmin) return PadicNumber::zero(a.p_, A);
    const BigInt mod = prime_power(a.p_, A - vmin);
    const BigInt s = mod_big(prime_power(a.p_, a.valuation() - vmin) * a.unit_ +
                                 prime_power(b.p_, b.valuation() - vmin) * b.unit_,
                             mod);
    if (s == 0) return PadicNumber::zero(a.p_, A);
    const auto [w, rest] = split_p(s, a.p_);
    const int v = vmin + w;
    return PadicNumber::from_parts(a.p_, v, rest, A - v);
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_) throw DomainError("p-adic numbers over different primes");
    if (a.is_zero() || b.is_zero()) {
        int A;
        if (a.is_zero() && b.is_zero()) A = a.precision_ + b.precision_;
        else if (a.is_zero()) A = a.precision_ + b.valuation();
        else A = b.precision_ + a.valuation();
        return PadicNumber::zero(a.p_, A);
    }
    const int N = std::min(a.precision_, b.precision_);
    return PadicNumber::from_parts(a.p_, a.valuation() + b.valuation(), a.unit_ * b.unit_, N);
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_) throw DomainError("p-adic numbers over different primes");
    if (b.is_zero()) throw DomainError("p-adic division by zero");
    if (a.is_zero()) return PadicNumber::zero(a.p_, a.precision_ - b.valuation());
    const int N = std::min(a.precision_, b.precision_);
    const BigInt mod = prime_power(a.p_, N);
    return PadicNumber::from_parts(a.p_, a.valuation() - b.valuation(), a.unit_ * inverse_mod_big(b.unit_, mod), N);
}

bool PadicNumber::agrees_with(const PadicNumber& other) const { return (*this - other).is_zero(); }

std::string to_string(const PadicNumber& x) {
    std::ostringstream out;
    if (x.is_zero()) {
        out << "O(" << x.prime() << "^" << x.absolute_precision() << ")";
        return out.str();
    }
    out << x.prime() << "^" << x.valuation() << " * " << x.unit().get_str() << " + O(" << x.prime() << "^"
        << x.absolute_precision() << ")";
    return out.str();
}

PadicNumber padic_exp(const PadicNumber& x) {
    const u64 p = x.prime();
    if (x.is_zero()) return PadicNumber::from_parts(p, 0, 1, std::max(1, x.absolute_precision()));
    const int v = x.valuation();
    const int bound = p == 2 ? 2 : 1;
    if (v < bound) {
        throw DomainError("padic_exp diverges: v_" + std::to_string(p) + "(x) = " + std::to_string(v) +
                          " but convergence needs v_p(x) > 1/(p-1), i.e. v_p(x) >= " + std::to_string(bound));
    }
    const int K = x.absolute_precision();
    const BigInt mod = prime_power(p, K);
    // t_n = p^(n v - v_p(n!)) u^n / (n!)', where (n!)' is the p-free part of n!.
    BigInt sum = 1;
    BigInt u_pow = 1;
    BigInt fact_unit = 1;
    i64 fact_val = 0;
    for (u64 n = 1;; ++n) {
        const i64 lhs = static_cast<i64>(p - 1) * static_cast<i64>(n) * v - static_cast<i64>(n - 1);
        if (lhs >= static_cast<i64>(p - 1) * K) break;
        u_pow = mod_big(u_pow * x.unit(), mod);
        const auto [w, rest] = split_p(from_u64(n), p);
        fact_val += w;
        fact_unit = mod_big(fact_unit * rest, mod);
        const i64 term_val = static_cast<i64>(n) * v - fact_val;
        if (term_val >= K) continue;
        const BigInt term = prime_power(p, static_cast<int>(term_val)) * u_pow * inverse_mod_big(fact_unit, mod);
        sum = mod_big(sum + term, mod);
    }
    return PadicNumber::from_parts(p, 0, sum, K);
}

PadicNumber padic_log(const PadicNumber& u) {
    const u64 p = u.prime();
    if (u.is_zero() || u.valuation() != 0) throw DomainError("padic_log needs a unit argument");
    const BigInt bp = from_u64(p);
    const BigInt u_minus_1 = u.unit() - 1;
    if (mpz_divisible_p(u_minus_1.get_mpz_t(), bp.get_mpz_t()) == 0) {
        throw DomainError("padic_log needs u = 1 (mod " + std::to_string(p) + ")");
    }
    const int K = u.absolute_precision();
    const PadicNumber x = u - PadicNumber::from_parts(p, 0, 1, K);
    if (x.is_zero()) return PadicNumber::zero(p, K);
    const int v = x.valuation();
    const BigInt mod = prime_power(p, K);
    BigInt sum = 0;
    BigInt x_pow = 1;
    for (u64 n = 1;; ++n) {
        if (static_cast<i64>(n) * v - floor_log(n, p) >= K) break;
        x_pow = mod_big(x_pow * x.unit(), mod);
        const auto [w, rest] = split_p(from_u64(n), p);
        const i64 term_val = static_cast<i64>(n) * v - w;
        if (term_val >= K) continue;
        BigInt term = prime_power(p, static_cast<int>(term_val)) * x_pow * inverse_mod_big(rest, mod);
        if (n % 2 == 0) term = -term;
        sum = mod_big(sum + term, mod);
    }
    if (sum == 0) return PadicNumber::zero(p, K);
    const auto [w, rest] = split_p(sum, p);
    return PadicNumber::from_parts(p, w, rest, K - w);
}

bool is_nth_power_unit(const PadicNumber& u, u64 n) {
    if (n < 2) throw DomainError("is_nth_power_unit needs n >= 2");
    if (u.is_zero() || u.valuation() != 0) throw DomainError("is_nth_power_unit needs a unit");
    const u64 p = u.prime();
    const int m = valuation(static_cast<i64>(n), p) + (p == 2 ? 2 : 1);
    if (u.precision() < m) {
        throw DomainError("is_nth_power_unit needs precision >= " + std::to_string(m) + ", got " +
                          std::to_string(u.precision()));
    }
    const BigInt pm = prime_power(p, m);
    if (!pm.fits_ulong_p()) throw LimitError("is_nth_power_unit: p^m does not fit in 64 bits");
    const u64 modulus = pm.get_ui();
    const u64 target = mod_big(u.unit(), pm).get_ui();
    if (p != 2) {
        // (Z/p^m)* is cyclic of order phi: target is an n-th power iff
        // target^(phi / gcd(n, phi)) = 1.
        const u64 phi = modulus / p * (p - 1);
        return pow_mod(target, phi / gcd_u64(n % phi == 0 ? phi : n % phi, phi), modulus) == 1;
    }
    for (u64 y = 1; y < modulus; y += 2) {
        if (pow_mod(y, n, modulus) == target) return true;
    }
    return false;
}

std::optional<PadicNumber> hensel_sqrt(const PadicNumber& a, int target_precision) {
    const u64 p = a.prime();
    if (target_precision < 1) throw DomainError("hensel_sqrt needs a positive target precision");
    if (a.is_zero()) return PadicNumber::zero(p, a.absolute_precision() / 2);
    const int v = a.valuation();
    if (v % 2 != 0) return std::nullopt;
    const BigInt& u = a.unit();
    if (p != 2) {
        const auto r0 = sqrt_mod_p(mod_big(u, from_u64(p)).get_si(), p);
        if (!r0) return std::nullopt;
        const int T = std::min(target_precision, a.precision());
        BigInt r = from_u64(*r0);
        for (int k = 1; k < T;) {
            k = std::min(2 * k, T);
            const BigInt mod = prime_power(p, k);
            r = mod_big(r - (r * r - u) * inverse_mod_big(mod_big(2 * r, mod), mod), mod);
        }
        return PadicNumber::from_parts(p, v / 2, r, T);
    }
    if (a.precision() < 3) {
        throw DomainError("hensel_sqrt over Q_2 needs relative precision >= 3 to decide squareness");
    }
    if (mod_big(u, 8) != 1) return std::nullopt;
    // r^2 = u mod 2^(k+1) determines r mod 2^k up to sign; fix r = 1 mod 4.
    const int T = std::min(target_precision, a.precision() - 1);
    BigInt r = 1;
    for (int k = 3; k <= T; ++k) {
        const BigInt mod = prime_power(2, k + 1);
        if (mod_big(r * r - u, mod) != 0) r += prime_power(2, k - 1);
    }
    return PadicNumber::from_parts(2, v / 2, r, T);
}

}  // namespace cft
