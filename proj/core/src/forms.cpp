#include "cft/forms.hpp"

#include "cft/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cft {

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

SL2Z compose(const SL2Z& m, const SL2Z& t) {
    return {m.p * t.p + m.q * t.r, m.p * t.q + m.q * t.s, m.r * t.p + m.s * t.r, m.r * t.q + m.s * t.s};
}

void validate_negative_discriminant(i64 D) {
    if (D >= 0) throw DomainError("discriminant must be negative (got " + std::to_string(D) + ")");
    make_discriminant(D);
}

}  // namespace

bool BinaryQuadraticForm::is_primitive() const {
    return std::gcd(std::gcd(a, b), c) == 1;
}

bool BinaryQuadraticForm::is_reduced() const {
    if (!(std::abs(b) <= a && a <= c)) return false;
    if ((std::abs(b) == a || a == c) && b < 0) return false;
    return true;
}

std::string to_string(const BinaryQuadraticForm& f) {
    std::ostringstream out;
    out << "(" << f.a << ", " << f.b << ", " << f.c << ")";
    return out.str();
}

BinaryQuadraticForm apply(const BinaryQuadraticForm& f, const SL2Z& m) {
    // F(p x + q y, r x + s y)
    const i128 a = static_cast<i128>(f.a) * m.p * m.p + static_cast<i128>(f.b) * m.p * m.r +
                   static_cast<i128>(f.c) * m.r * m.r;
    const i128 b = 2 * static_cast<i128>(f.a) * m.p * m.q + static_cast<i128>(f.b) * (m.p * m.s + m.q * m.r) +
                   2 * static_cast<i128>(f.c) * m.r * m.s;
    const i128 c = static_cast<i128>(f.a) * m.q * m.q + static_cast<i128>(f.b) * m.q * m.s +
                   static_cast<i128>(f.c) * m.s * m.s;
    return {static_cast<i64>(a), static_cast<i64>(b), static_cast<i64>(c)};
}

BinaryQuadraticForm principal_form(const Discriminant& disc) {
    const i64 D = disc.D;
    if (reduce_mod(D, 4) == 0) return {1, 0, -D / 4};
    return {1, 1, (1 - D) / 4};
}

BinaryQuadraticForm principal_form(i64 D) { return principal_form(make_discriminant(D)); }

Reduction reduce_form_with_transform(const BinaryQuadraticForm& input) {
    if (input.discriminant() >= 0) throw DomainError("reduce_form: form " + to_string(input) + " is not definite");
    if (input.a <= 0) throw DomainError("reduce_form: form " + to_string(input) + " is not positive definite");
    BinaryQuadraticForm f = input;
    SL2Z m;
    for (;;) {
        // Translate b into (-a, a].
        if (f.b > f.a || f.b <= -f.a) {
            const i64 k = floor_div(f.a - f.b, 2 * f.a);
            const SL2Z t{1, k, 0, 1};
            f = apply(f, t);
            m = compose(m, t);
        }
        if (f.a > f.c) {
            const SL2Z t{0, -1, 1, 0};
            f = apply(f, t);
            m = compose(m, t);
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0) {
        const SL2Z t{0, -1, 1, 0};
        f = apply(f, t);
        m = compose(m, t);
    }
    return {f, m};
}

BinaryQuadraticForm reduce_form(const BinaryQuadraticForm& f) { return reduce_form_with_transform(f).form; }

ClassNumberResult class_number_neg(i64 D) {
    validate_negative_discriminant(D);
    ClassNumberResult out;
    const i64 absD = -D;
    for (i64 a = 1; 3 * a * a <= absD; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if (((b - D) % 2 + 2) % 2 != 0) continue;
            const i64 num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const i64 c = num / (4 * a);
            const BinaryQuadraticForm f{a, b, c};
            if (c < a || !f.is_reduced() || !f.is_primitive()) continue;
            out.forms.push_back(f);
        }
    }
    std::sort(out.forms.begin(), out.forms.end(), [](const auto& x, const auto& y) {
        if (x.a != y.a) return x.a < y.a;
        if (std::abs(x.b) != std::abs(y.b)) return std::abs(x.b) < std::abs(y.b);
        return x.b > y.b;
    });
    out.h = static_cast<i64>(out.forms.size());
    return out;
}

std::size_t class_index(const ClassNumberResult& classes, const BinaryQuadraticForm& reduced) {
    const auto it = std::find(classes.forms.begin(), classes.forms.end(), reduced);
    if (it == classes.forms.end()) throw DomainError("class_index: " + to_string(reduced) + " is not a listed reduced form");
    return static_cast<std::size_t>(it - classes.forms.begin());
}

std::optional<RepresentationWitness> represent_prime_by_search(u64 p, i64 D) {
    validate_negative_discriminant(D);
    const i64 ip = static_cast<i64>(p);
    const i64 absD = -D;
    if (reduce_mod(D, 4) == 0) {
        const i64 n = absD / 4;
        for (i64 y = 0; n * y * y <= ip; ++y) {
            const i64 rest = ip - n * y * y;
            if (is_square(rest)) return RepresentationWitness{static_cast<i64>(isqrt(static_cast<u64>(rest))), y, ip};
        }
        return std::nullopt;
    }
    // 4p = (2x + y)^2 + |D| y^2
    for (i64 y = 0; absD * y * y <= 4 * ip; ++y) {
        const i64 rest = 4 * ip - absD * y * y;
        if (!is_square(rest)) continue;
        const i64 s = static_cast<i64>(isqrt(static_cast<u64>(rest)));
        if ((s - y) % 2 == 0) return RepresentationWitness{(s - y) / 2, y, ip};
    }
    return std::nullopt;
}

std::optional<RepresentationWitness> represent_prime(u64 p, i64 D) {
    validate_negative_discriminant(D);
    if (!is_prime(p)) throw DomainError("represent_prime: " + std::to_string(p) + " is not prime");
    if (D % static_cast<i64>(p) == 0) {
        throw DomainError("represent_prime: p = " + std::to_string(p) + " divides D = " + std::to_string(D));
    }
    if (reduce_mod(D, 4) == 0 && p != 2 && kronecker_symbol(D, static_cast<i64>(p)) == 1) {
        // Cornacchia for x^2 + n y^2 = p.
        const i64 n = -D / 4;
        const auto root = sqrt_mod_p(-n, p);
        if (!root) return std::nullopt;
        u64 a = p, b = *root;
        const u64 bound = isqrt(p);
        while (b > bound) {
            const u64 r = a % b;
            a = b;
            b = r;
        }
        const i64 x = static_cast<i64>(b);
        const i64 rest = static_cast<i64>(p) - x * x;
        if (rest % n == 0 && is_square(rest / n)) {
            return RepresentationWitness{x, static_cast<i64>(isqrt(static_cast<u64>(rest / n))), static_cast<i64>(p)};
        }
        return std::nullopt;
    }
    return represent_prime_by_search(p, D);
}

CriterionChecker::CriterionChecker(i64 D, std::optional<IntPolynomial> g) : D_(D), g_(std::move(g)) {
    h_ = class_number_neg(D).h;
    if (g_) {
        if (g_->degree() < 1) throw DomainError("criterion: certifying polynomial must have positive degree");
        g_disc_ = cft::discriminant(*g_);
    } else if (h_ != 1) {
        throw DomainError("criterion: h(" + std::to_string(D) + ") = " + std::to_string(h_) +
                          " > 1 requires a certifying polynomial g");
    }
}

bool CriterionChecker::excluded(u64 p) const {
    const i64 ip = static_cast<i64>(p);
    return p == 2 || D_ % ip == 0 || (g_disc_ && *g_disc_ % from_u64(p) == 0) || (g_ && g_->leading() % ip == 0);
}

CriterionResult CriterionChecker::check(u64 p) const {
    if (!is_prime(p)) throw DomainError("criterion: " + std::to_string(p) + " is not prime");
    const i64 ip = static_cast<i64>(p);
    if (p == 2 || D_ % ip == 0) {
        throw DomainError("criterion: p = " + std::to_string(p) + " divides 2D = " + std::to_string(2 * D_));
    }
    if (g_disc_ && *g_disc_ % from_u64(p) == 0) {
        throw DomainError("criterion: p = " + std::to_string(p) + " divides disc(g) = " + g_disc_->get_str());
    }
    if (g_ && g_->leading() % ip == 0) {
        throw DomainError("criterion: p = " + std::to_string(p) + " divides the leading coefficient of g");
    }
    CriterionResult out;
    out.witness = represent_prime(p, D_);
    out.represented = out.witness.has_value();
    out.criterion = kronecker_symbol(D_, ip) == 1 && (!g_ || fp::has_root(fp::reduce(*g_, p), p));
    out.agree = out.represented == out.criterion;
    return out;
}

CriterionResult criterion_check(u64 p, i64 D, const std::optional<IntPolynomial>& g) {
    return CriterionChecker(D, g).check(p);
}

}  // namespace cft
