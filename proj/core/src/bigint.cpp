#include "cft/bigint.hpp"

#include "cft/arith.hpp"
#include "cft/error.hpp"

#include <random>

namespace cft {

std::int64_t to_i64(const BigInt& x) {
    if (!x.fits_slong_p()) throw LimitError("integer " + x.get_str() + " does not fit in int64");
    return x.get_si();
}

BigInt from_i64(std::int64_t x) {
    BigInt r;
    mpz_set_si(r.get_mpz_t(), x);
    return r;
}

BigInt from_u64(std::uint64_t x) {
    BigInt r;
    mpz_set_ui(r.get_mpz_t(), x);
    return r;
}

int valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw DomainError("valuation: argument must be nonzero");
    return static_cast<int>(mpz_remove(BigInt().get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& q, const BigInt& p) {
    return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

BigInt rational_mod(const Rational& q, const BigInt& m) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()) == 0) {
        if (m == 1) return 0;
        throw DomainError("rational_mod: denominator of " + q.get_str() + " is not invertible modulo " + m.get_str());
    }
    BigInt r = BigInt(q.get_num()) * inv % m;
    if (r < 0) r += m;
    return r;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw ParseError("not a rational number: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime(n.get_ui());
    if (mpz_even_p(n.get_mpz_t())) return false;
    BigInt d = n - 1;
    const auto s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    std::mt19937_64 rng(0x5eed'c0ffeeULL);
    const BigInt n_minus_3 = n - 3;
    for (int round = 0; round < 40; ++round) {
        BigInt a = from_u64(rng());
        a = a % n_minus_3 + 2;
        BigInt x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace cft
