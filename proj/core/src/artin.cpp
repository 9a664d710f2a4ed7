#include "cft/artin.hpp"

#include "cft/error.hpp"
#include "cft/rayclass.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

namespace cft {

Frobenius frobenius_cyclotomic(u64 p, u64 m) {
    if (!is_prime(p)) throw DomainError("frobenius_cyclotomic: " + std::to_string(p) + " is not prime");
    if (m < 3) throw DomainError("frobenius_cyclotomic: m must be >= 3");
    if (m % p == 0) {
        throw DomainError("frobenius_cyclotomic: " + std::to_string(p) + " divides " + std::to_string(m) +
                          " and ramifies; use decomposition_type_cyclotomic");
    }
    const u64 cls = p % m;
    return {{m, cls}, multiplicative_order(static_cast<i64>(cls), m)};
}

DecompositionType decomposition_type_cyclotomic(u64 p, u64 m) {
    if (!is_prime(p)) throw DomainError("decomposition_type_cyclotomic: " + std::to_string(p) + " is not prime");
    if (m < 1) throw DomainError("decomposition_type_cyclotomic: m must be positive");
    u64 pk = 1, rest = m;
    while (rest % p == 0) {
        rest /= p;
        pk *= p;
    }
    DecompositionType t;
    t.e = euler_phi(pk);
    t.f = rest == 1 ? 1 : multiplicative_order(static_cast<i64>(p % rest), rest);
    t.r = euler_phi(rest) / t.f;
    return t;
}

ResidueClass artin_map_q(const Rational& x, u64 m) {
    if (m < 1) throw DomainError("artin_map_q: modulus must be positive");
    if (x <= 0) throw DomainError("artin_map_q: the ideal must be given by its positive generator");
    const BigInt bm = from_u64(m);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), bm.get_mpz_t());
    if (g != 1) throw DomainError("artin_map_q: numerator of " + to_string(x) + " is not coprime to " + std::to_string(m));
    mpz_gcd(g.get_mpz_t(), x.get_den_mpz_t(), bm.get_mpz_t());
    if (g != 1) throw DomainError("artin_map_q: denominator of " + to_string(x) + " is not coprime to " + std::to_string(m));
    if (m == 1) return {1, 0};
    return {m, rational_mod(x, bm).get_ui()};
}

ArtinKernelReport verify_artin_kernel(u64 m, u64 samples, u64 seed) {
    if (m < 3) throw DomainError("verify_artin_kernel: m must be >= 3");
    ArtinKernelReport report;
    report.modulus = m;
    const Modulus modulus = rational_modulus(static_cast<i64>(m), true);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> den_dist(1, 1'000'000);
    std::uniform_int_distribution<u64> k_dist(0, 1'000'000);
    while (report.samples < samples) {
        const u64 b = den_dist(rng);
        if (std::gcd(b, m) != 1) continue;
        const u64 a = b + m * k_dist(rng);
        Rational x(from_u64(a), from_u64(b));
        x.canonicalize();
        ++report.samples;
        if (!congruent_mod_star(x, 1, modulus)) {
            report.counterexamples.push_back(x);
            continue;
        }
        if (artin_map_q(x, m).value == 1 % m) ++report.in_kernel;
        else report.counterexamples.push_back(x);
    }
    return report;
}

std::string to_string(const SplittingPattern& pattern) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < pattern.degrees.size(); ++i) {
        if (i) out << ',';
        out << pattern.degrees[i];
    }
    out << '}';
    return out.str();
}

SplittingPattern parse_pattern(const std::string& text) {
    SplittingPattern out;
    std::string body;
    for (char ch : text) {
        if (ch != '{' && ch != '}' && ch != ' ') body.push_back(ch);
    }
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        int d = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
        if (ec != std::errc() || end != item.data() + item.size() || d < 1)
            throw ParseError("bad splitting pattern '" + text + "'");
        out.degrees.push_back(d);
    }
    if (out.degrees.empty()) throw ParseError("empty splitting pattern");
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

PatternComputer::PatternComputer(IntPolynomial f) : f_(std::move(f)) {
    if (f_.degree() < 1) throw DomainError("splitting_pattern needs a polynomial of degree >= 1");
    disc_ = cft::discriminant(f_);
    if (disc_ == 0) throw DomainError("splitting_pattern: " + to_string(f_) + " is not squarefree over Q");
}

bool PatternComputer::excluded(u64 p) const {
    const BigInt bp = from_u64(p);
    return mpz_divisible_p(disc_.get_mpz_t(), bp.get_mpz_t()) != 0 || f_.leading() % static_cast<i64>(p) == 0;
}

SplittingPattern PatternComputer::pattern(u64 p) const {
    if (!is_prime(p)) throw DomainError("splitting_pattern: " + std::to_string(p) + " is not prime");
    if (f_.leading() % static_cast<i64>(p) == 0) {
        throw DomainError("splitting_pattern: " + std::to_string(p) + " divides the leading coefficient");
    }
    const BigInt bp = from_u64(p);
    if (mpz_divisible_p(disc_.get_mpz_t(), bp.get_mpz_t()) != 0) {
        throw DomainError("splitting_pattern: " + std::to_string(p) + " divides disc(f) = " + disc_.get_str());
    }
    return {fp::factor_degrees(fp::reduce(f_, p), p)};
}

SplittingPattern splitting_pattern(const IntPolynomial& f, u64 p) { return PatternComputer(f).pattern(p); }

}  // namespace cft
