#include "cft/rayclass.hpp"

#include "cft/error.hpp"
#include "cft/forms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cft {

namespace {

int rational_sign(const Rational& q) { return sgn(q); }

void require_nonzero(const Rational& q, const char* what) {
    if (q == 0) throw DomainError(std::string(what) + " must be nonzero for a mod* congruence");
}

void require_rational(const Modulus& m, const char* what) {
    if (!m.is_rational()) throw DomainError(std::string(what) + " is only implemented over Q");
}

// Canonical representative of x + y*w modulo the lattice of an ideal.
std::pair<i128, i128> reduce_mod_ideal(i128 x, i128 y, const QuadIdeal& I) {
    i128 q = y / I.c();
    if (y - q * I.c() < 0) --q;
    y -= q * I.c();
    x -= q * I.b();
    x %= I.a();
    if (x < 0) x += I.a();
    return {x, y};
}

std::pair<i128, i128> mul_mod_ideal(std::pair<i128, i128> u, std::pair<i128, i128> v, const QuadIdeal& I) {
    const i128 D = I.order().D(), n = I.order().w_norm();
    const i128 x = u.first * v.first - n * u.second * v.second;
    const i128 y = u.first * v.second + u.second * v.first + D * u.second * v.second;
    return reduce_mod_ideal(x, y, I);
}

i64 unit_index_rational(const Modulus& m) {
    return congruent_mod_star(Rational(-1), Rational(1), m) ? 1 : 2;
}

i64 unit_index_imaginary(const Modulus& m) {
    const QuadIdeal m0 = ideal_finite_part(m);
    const std::vector<QuadElement> torsion = torsion_units(*m.order);
    i64 count = 0;
    for (const QuadElement& u : torsion) {
        const QuadElement diff = u - QuadElement::from_integer(*m.order, 1);
        if (m0.contains(diff)) ++count;
    }
    return static_cast<i64>(torsion.size()) / count;
}

i64 unit_index_real(const Modulus& m, const UnitIndexOptions& options) {
    const QuadOrder& order = *m.order;
    const QuadIdeal m0 = ideal_finite_part(m);
    const QuadElement eps = fundamental_unit(order.D());
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), eps.y().get_mpz_t(), from_i64(m0.c()).get_mpz_t());
    BigInt ex = eps.x() - q * m0.b();
    const BigInt ey = eps.y() - q * m0.c();
    mpz_fdiv_r(ex.get_mpz_t(), ex.get_mpz_t(), from_i64(m0.a()).get_mpz_t());
    const auto eps_res = reduce_mod_ideal(to_i64(ex), to_i64(ey), m0);
    const auto one = reduce_mod_ideal(1, 0, m0);
    const auto minus_one = reduce_mod_ideal(-1, 0, m0);
    std::vector<int> eps_signs;
    for (int place : m.real_places) eps_signs.push_back(eps.real_sign(place));

    // Walk eps^k through (O/m0)* x signs until it returns to the identity,
    // noting whether the image of -1 shows up on the way.
    auto residue = eps_res;
    std::vector<int> signs = eps_signs;
    bool minus_one_hit = false;
    for (u64 k = 1; k <= options.iteration_cap; ++k) {
        const bool all_plus = std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
        const bool all_minus = std::all_of(signs.begin(), signs.end(), [](int s) { return s < 0; });
        if (residue == minus_one && all_minus) minus_one_hit = true;
        if (residue == one && all_plus) {
            const i64 order_eps = static_cast<i64>(k);
            return minus_one_hit ? order_eps : 2 * order_eps;
        }
        residue = mul_mod_ideal(residue, eps_res, m0);
        for (std::size_t i = 0; i < signs.size(); ++i) signs[i] *= eps_signs[i];
    }
    throw LimitError("unit_index: order of the fundamental unit modulo " + to_string(m) + " exceeds " +
                     std::to_string(options.iteration_cap) + " iterations");
}

BigInt crt_big(const std::vector<std::pair<BigInt, BigInt>>& congruences) {
    BigInt x = 0, mod = 1;
    for (const auto& [r, m] : congruences) {
        BigInt inv;
        const BigInt mod_mod_m = mod % m;
        if (mpz_invert(inv.get_mpz_t(), mod_mod_m.get_mpz_t(), m.get_mpz_t()) == 0) {
            throw DomainError("weak approximation: moduli are not coprime");
        }
        BigInt t = ((r - x) % m + m) % m;
        t = (t * inv) % m;
        x += mod * t;
        mod *= m;
    }
    return x;
}

}  // namespace

bool Modulus::has_place(int place) const {
    return std::find(real_places.begin(), real_places.end(), place) != real_places.end();
}

Modulus rational_modulus(i64 m, bool infinite) {
    if (m < 1) throw DomainError("modulus finite part must be >= 1, got " + std::to_string(m));
    Modulus out;
    out.rational_part = factorize(m).factors;
    if (infinite) out.real_places = {0};
    return out;
}

Modulus parse_rational_modulus(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ') s.push_back(ch);
    }
    // Accept the middle dot as a separator too.
    for (std::size_t at; (at = s.find("\u00b7")) != std::string::npos;) s.replace(at, 2, "*");
    if (s.empty()) throw ParseError("empty modulus");
    std::map<u64, unsigned> exps;
    bool infinite = false;
    std::stringstream in(s);
    std::string factor;
    while (std::getline(in, factor, '*')) {
        if (factor == "inf" || factor == "oo" || factor == "∞") {
            if (infinite) throw DomainError("modulus lists the infinite place twice");
            infinite = true;
            continue;
        }
        const auto caret = factor.find('^');
        const std::string base_text = factor.substr(0, caret);
        unsigned e = 1;
        i64 base = 0;
        try {
            std::size_t used = 0;
            base = std::stoll(base_text, &used);
            if (used != base_text.size()) throw ParseError("");
            if (caret != std::string::npos) {
                const std::string e_text = factor.substr(caret + 1);
                const long ev = std::stol(e_text, &used);
                if (used != e_text.size() || ev < 0) throw ParseError("");
                e = static_cast<unsigned>(ev);
            }
        } catch (const std::exception&) {
            throw ParseError("bad modulus factor '" + factor + "' in '" + text + "'");
        }
        if (base < 1) throw DomainError("modulus factors must be positive: '" + factor + "'");
        for (const auto& [p, k] : factorize(base).factors) exps[p] += k * e;
    }
    Modulus out;
    for (const auto& [p, k] : exps) {
        if (k > 0) out.rational_part.push_back({p, k});
    }
    if (infinite) out.real_places = {0};
    return out;
}

Modulus quadratic_modulus(const QuadIdeal& m0, std::vector<int> real_places) {
    Modulus out;
    out.order = m0.order();
    out.ideal_part = factor_ideal(m0);
    std::sort(real_places.begin(), real_places.end());
    real_places.erase(std::unique(real_places.begin(), real_places.end()), real_places.end());
    for (int place : real_places) {
        if (m0.order().is_imaginary()) throw DomainError("imaginary quadratic fields have no real places");
        if (place != 0 && place != 1) throw DomainError("real place index must be 0 or 1");
    }
    out.real_places = std::move(real_places);
    return out;
}

std::string to_string(const Modulus& m) {
    std::ostringstream out;
    if (m.is_rational()) {
        if (!m.rational_part.empty()) out << to_string(FactoredInteger{1, m.rational_part});
        if (!m.real_places.empty()) out << (m.rational_part.empty() ? "inf" : "*inf");
        if (m.rational_part.empty() && m.real_places.empty()) out << "1";
    } else {
        out << to_string(ideal_finite_part(m));
        for (int place : m.real_places) out << "*inf" << place;
    }
    return out.str();
}

unsigned exponent_at(const Modulus& m, u64 p) {
    for (const auto& pp : m.rational_part) {
        if (pp.prime == p) return pp.exponent;
    }
    return 0;
}

i64 rational_finite_part(const Modulus& m) {
    require_rational(m, "rational_finite_part");
    return FactoredInteger{1, m.rational_part}.value();
}

QuadIdeal ideal_finite_part(const Modulus& m) {
    if (m.is_rational()) throw DomainError("ideal_finite_part needs a quadratic modulus");
    QuadIdeal out = unit_ideal(*m.order);
    for (const auto& [prime, e] : m.ideal_part) out = ideal_mul(out, ideal_pow(prime, e));
    return out;
}

Modulus modulus_gcd(const Modulus& a, const Modulus& b) {
    require_rational(a, "modulus_gcd");
    require_rational(b, "modulus_gcd");
    Modulus out;
    for (const auto& pp : a.rational_part) {
        const unsigned e = std::min(pp.exponent, exponent_at(b, pp.prime));
        if (e > 0) out.rational_part.push_back({pp.prime, e});
    }
    if (a.has_place(0) && b.has_place(0)) out.real_places = {0};
    return out;
}

Modulus modulus_lcm(const Modulus& a, const Modulus& b) {
    require_rational(a, "modulus_lcm");
    require_rational(b, "modulus_lcm");
    std::map<u64, unsigned> exps;
    for (const auto& pp : a.rational_part) exps[pp.prime] = std::max(exps[pp.prime], pp.exponent);
    for (const auto& pp : b.rational_part) exps[pp.prime] = std::max(exps[pp.prime], pp.exponent);
    Modulus out;
    for (const auto& [p, e] : exps) out.rational_part.push_back({p, e});
    if (a.has_place(0) || b.has_place(0)) out.real_places = {0};
    return out;
}

bool congruent_mod_star(const Rational& x, const Rational& y, const Modulus& m) {
    require_rational(m, "congruent_mod_star");
    require_nonzero(x, "x");
    require_nonzero(y, "y");
    if (m.has_place(0) && rational_sign(x) != rational_sign(y)) return false;
    const Rational diff = x / y - 1;
    if (diff == 0) return true;
    for (const auto& pp : m.rational_part) {
        if (valuation(diff, from_u64(pp.prime)) < static_cast<int>(pp.exponent)) return false;
    }
    return true;
}

Rational weak_approx_q(const Rational& y, const Rational& z, const Modulus& m, const Modulus& m_prime) {
    require_rational(m, "weak_approx_q");
    require_rational(m_prime, "weak_approx_q");
    require_nonzero(y, "y");
    require_nonzero(z, "z");

    const Modulus g = modulus_gcd(m, m_prime);
    if (g.has_place(0) && rational_sign(y) != rational_sign(z)) {
        throw DomainError("weak_approx_q: y and z differ in sign at the infinite place of gcd(m, m') = " +
                          to_string(g));
    }
    for (const auto& pp : g.rational_part) {
        const Rational diff = y / z - 1;
        if (diff != 0 && valuation(diff, from_u64(pp.prime)) < static_cast<int>(pp.exponent)) {
            throw DomainError("weak_approx_q: y is not congruent to z mod* " + std::to_string(pp.prime) + "^" +
                              std::to_string(pp.exponent) + " (place " + std::to_string(pp.prime) +
                              " of gcd(m, m') = " + to_string(g) + ")");
        }
    }
    if (y == z) return y;

    // Finite places: at each p of lcm(m, m') aim for whichever of y, z carries
    // the larger exponent, scale by the uniformizers lambda so the targets
    // become p-units, then solve by CRT.
    struct Target {
        u64 p;
        unsigned e;
        const Rational* value;
    };
    std::vector<Target> targets;
    const Modulus l = modulus_lcm(m, m_prime);
    for (const auto& pp : l.rational_part) {
        const bool take_y = exponent_at(m, pp.prime) >= exponent_at(m_prime, pp.prime);
        targets.push_back({pp.prime, pp.exponent, take_y ? &y : &z});
    }
    Rational lambda = 1;
    for (const Target& t : targets) {
        const int v = valuation(*t.value, from_u64(t.p));
        BigInt pv;
        mpz_pow_ui(pv.get_mpz_t(), from_u64(t.p).get_mpz_t(), static_cast<unsigned long>(std::abs(v)));
        lambda *= v >= 0 ? Rational(pv) : Rational(1) / Rational(pv);
    }
    lambda.canonicalize();
    std::vector<std::pair<BigInt, BigInt>> system;
    for (const Target& t : targets) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), from_u64(t.p).get_mpz_t(), t.e);
        Rational unit = *t.value / lambda;
        unit.canonicalize();
        system.emplace_back(rational_mod(unit, pe), pe);
    }
    const Rational alpha = targets.empty() ? Rational(1) : Rational(crt_big(system)) * lambda;

    auto satisfies = [&](const Rational& x) {
        return x != 0 && congruent_mod_star(x, y, m) && congruent_mod_star(x, z, m_prime);
    };
    std::optional<int> wanted_sign;
    if (m.has_place(0)) wanted_sign = rational_sign(y);
    else if (m_prime.has_place(0)) wanted_sign = rational_sign(z);
    if (!wanted_sign || rational_sign(alpha) == *wanted_sign) {
        if (satisfies(alpha)) return alpha;
    }

    // Infinite place: beta = (theta - a0)/(theta - a1) with theta = 0, a0 = -1,
    // a1 = 1 is negative under the only embedding; beta = 1 otherwise.
    const Rational beta = wanted_sign && *wanted_sign < 0 ? Rational(-1) : Rational(1);
    if (targets.empty()) return beta;
    BigInt M = 1;
    for (const Target& t : targets) M *= from_u64(t.p);
    BigInt MN = M;
    for (int N = 1; N <= 4096; ++N) {
        const Rational x = alpha + Rational(MN) * beta;
        if (satisfies(x)) return x;
        MN *= M;
    }
    throw LimitError("weak_approx_q: no admissible exponent N found");
}

i64 unit_index(const Modulus& m, const UnitIndexOptions& options) {
    if (m.is_rational()) return unit_index_rational(m);
    if (!m.order->is_maximal()) throw DomainError("unit_index needs a maximal order");
    if (m.order->is_imaginary()) return unit_index_imaginary(m);
    return unit_index_real(m, options);
}

std::string to_string(ClassNumberSource source) {
    switch (source) {
        case ClassNumberSource::Rational: return "rational";
        case ClassNumberSource::Forms: return "forms";
        case ClassNumberSource::Supplied: return "supplied";
    }
    return "?";
}

RayClassReport ray_class_number(const Modulus& m, std::optional<i64> supplied_h, const UnitIndexOptions& options) {
    RayClassReport r;
    r.two_power_s = i64{1} << m.real_places.size();
    i64 phi = 1;
    if (m.is_rational()) {
        r.h = 1;
        r.h_source = ClassNumberSource::Rational;
        for (const auto& pp : m.rational_part) {
            i64 pe = 1;
            for (unsigned i = 0; i < pp.exponent; ++i) pe *= static_cast<i64>(pp.prime);
            r.norm_m0 *= pe;
            phi *= pe / static_cast<i64>(pp.prime) * (static_cast<i64>(pp.prime) - 1);
            r.euler_factor *= Rational(from_u64(pp.prime - 1), from_u64(pp.prime));
        }
    } else {
        const QuadOrder& order = *m.order;
        if (!order.is_maximal()) throw DomainError("ray_class_number needs a maximal order");
        if (order.is_imaginary()) {
            r.h = class_number_neg(order.D()).h;
            r.h_source = ClassNumberSource::Forms;
        } else {
            if (!supplied_h) {
                throw DomainError("ray_class_number: the class number of a real quadratic field must be supplied");
            }
            if (*supplied_h < 1) throw DomainError("supplied class number must be positive");
            r.h = *supplied_h;
            r.h_source = ClassNumberSource::Supplied;
        }
        const QuadIdeal m0 = ideal_finite_part(m);
        r.norm_m0 = m0.norm();
        phi = residue_unit_count(m0);
        for (const auto& [prime, e] : m.ideal_part) {
            r.euler_factor *= Rational(from_i64(prime.norm() - 1), from_i64(prime.norm()));
        }
    }
    r.euler_factor.canonicalize();
    r.unit_index = unit_index(m, options);
    const i64 numerator = r.two_power_s * phi * r.h;
    if (numerator % r.unit_index != 0) {
        throw DomainError("ray class formula gave a non-integer for " + to_string(m));
    }
    r.h_m = numerator / r.unit_index;
    return r;
}

i64 ray_class_count_bruteforce_q(const Modulus& m) {
    require_rational(m, "ray_class_count_bruteforce_q");
    const i64 m0 = rational_finite_part(m);
    if (m0 > 100'000) throw LimitError("brute-force ray class enumeration is capped at m0 <= 100000");
    std::vector<i64> reps;
    for (i64 a = 1; a <= m0; ++a) {
        if (std::gcd(a, m0) == 1) reps.push_back(a);
    }
    std::vector<std::size_t> parent(reps.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            Rational q(from_i64(reps[i]), from_i64(reps[j]));
            q.canonicalize();
            if (congruent_mod_star(q, 1, m) || congruent_mod_star(-q, 1, m)) parent[find(j)] = find(i);
        }
    }
    i64 classes = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (find(i) == i) ++classes;
    }
    return classes;
}

}  // namespace cft
