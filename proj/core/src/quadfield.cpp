#include "cft/quadfield.hpp"

#include "cft/error.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace cft {

namespace {

bool is_squarefree(i64 n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n).factors) {
        if (e > 1) return false;
    }
    return true;
}

void require_same_order(const QuadElement& a, const QuadElement& b) {
    if (!(a.order() == b.order())) {
        throw DomainError("quadratic elements belong to different orders (D = " + std::to_string(a.order().D()) +
                          " vs " + std::to_string(b.order().D()) + ")");
    }
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

}  // namespace

bool is_fundamental_discriminant(i64 d) {
    if (d == 0 || d == 1) return false;
    const u64 r4 = reduce_mod(d, 4);
    if (r4 == 1) return is_squarefree(d);
    if (r4 == 0) {
        const i64 m = d / 4;
        const u64 m4 = reduce_mod(m, 4);
        return (m4 == 2 || m4 == 3) && is_squarefree(m);
    }
    return false;
}

Discriminant make_discriminant(i64 D) {
    if (D == 0 || D == 1) throw DomainError("discriminant must not be 0 or 1 (got " + std::to_string(D) + ")");
    const u64 r4 = reduce_mod(D, 4);
    if (r4 != 0 && r4 != 1) {
        throw DomainError("discriminant must be 0 or 1 mod 4 (got " + std::to_string(D) + ")");
    }
    if (is_square(D)) throw DomainError("discriminant must not be a perfect square (got " + std::to_string(D) + ")");
    // Largest f with f^2 | D and D/f^2 still a discriminant.
    i64 f = 1;
    for (const auto& [p, e] : factorize(D).factors) {
        for (unsigned k = 0; k < e / 2; ++k) f *= static_cast<i64>(p);
    }
    for (;;) {
        const i64 d = D / (f * f);
        if (is_fundamental_discriminant(d)) return {D, d, f};
        // Only the 2-part can overshoot: D/f^2 = 2,3 mod 4 means one factor 2 too many.
        if (f % 2 != 0) break;
        f /= 2;
    }
    throw DomainError("no fundamental decomposition found for " + std::to_string(D));
}

QuadOrder::QuadOrder(const Discriminant& disc) : disc_(disc) {
    const i64 D = disc.D;
    w_norm_ = static_cast<i64>((static_cast<i128>(D) * D - D) / 4);
    const i64 dk = disc.fundamental;
    if (reduce_mod(dk, 4) == 1) {
        m_ = dk;
        scale_ = disc.conductor;
    } else {
        m_ = dk / 4;
        scale_ = 2 * disc.conductor;
    }
}

QuadElement::QuadElement(const QuadOrder& order, BigInt x, BigInt y, BigInt denom)
    : order_(order), x_(std::move(x)), y_(std::move(y)), denom_(std::move(denom)) {
    if (denom_ == 0) throw DomainError("quadratic element with zero denominator");
    normalize();
}

void QuadElement::normalize() {
    if (denom_ < 0) {
        x_ = -x_;
        y_ = -y_;
        denom_ = -denom_;
    }
    BigInt g = gcd(gcd(x_, y_), denom_);
    if (g > 1) {
        x_ /= g;
        y_ /= g;
        denom_ /= g;
    }
}

QuadElement QuadElement::from_sqrt_form(const QuadOrder& order, const Rational& a, const Rational& b) {
    // sqrt(m) = sqrt(D)/s and sqrt(D) = 2w - D.
    const Rational s = Rational(from_i64(order.sqrt_scale()));
    const Rational D = Rational(from_i64(order.D()));
    const Rational xq = a - b * D / s;
    const Rational yq = 2 * b / s;
    const BigInt den = lcm(BigInt(xq.get_den()), BigInt(yq.get_den()));
    return {order, BigInt(xq.get_num()) * (den / xq.get_den()), BigInt(yq.get_num()) * (den / yq.get_den()), den};
}

std::pair<Rational, Rational> QuadElement::sqrt_coordinates() const {
    // (x + y(D + s*sqrt(m))/2)/denom
    const Rational a = Rational(2 * x_ + y_ * from_i64(order_.D()), 2 * denom_);
    const Rational b = Rational(y_ * from_i64(order_.sqrt_scale()), 2 * denom_);
    Rational ac = a, bc = b;
    ac.canonicalize();
    bc.canonicalize();
    return {ac, bc};
}

Rational QuadElement::norm() const {
    const BigInt D = from_i64(order_.D());
    const BigInt n = from_i64(order_.w_norm());
    Rational r(x_ * x_ + D * x_ * y_ + n * y_ * y_, denom_ * denom_);
    r.canonicalize();
    return r;
}

Rational QuadElement::trace() const {
    Rational r(2 * x_ + from_i64(order_.D()) * y_, denom_);
    r.canonicalize();
    return r;
}

QuadElement QuadElement::conjugate() const {
    return {order_, x_ + y_ * from_i64(order_.D()), -y_, denom_};
}

QuadElement QuadElement::inverse() const {
    const Rational n = norm();
    if (n == 0) throw DomainError("inverse of zero quadratic element");
    const QuadElement c = conjugate();
    // c / n = (cx + cy w) * den(n) / (c.denom * num(n))
    return {order_, c.x_ * n.get_den(), c.y_ * n.get_den(), c.denom_ * n.get_num()};
}

long double QuadElement::real_value(int embedding) const {
    if (order_.is_imaginary()) throw DomainError("real_value: order is imaginary");
    const auto [a, b] = sqrt_coordinates();
    const long double root = std::sqrt(static_cast<long double>(order_.squarefree_part()));
    const long double bv = embedding == 0 ? b.get_d() : -b.get_d();
    return static_cast<long double>(a.get_d()) + bv * root;
}

int QuadElement::real_sign(int embedding) const {
    if (order_.is_imaginary()) throw DomainError("real_sign: order is imaginary");
    auto [a, b] = sqrt_coordinates();
    if (embedding != 0) b = -b;
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // a and b*sqrt(m) have opposite signs: compare a^2 with b^2 m.
    const Rational lhs = a * a;
    const Rational rhs = b * b * Rational(from_i64(order_.squarefree_part()));
    return lhs > rhs ? sa : sb;
}

QuadElement operator+(const QuadElement& a, const QuadElement& b) {
    require_same_order(a, b);
    return {a.order_, a.x_ * b.denom_ + b.x_ * a.denom_, a.y_ * b.denom_ + b.y_ * a.denom_, a.denom_ * b.denom_};
}

QuadElement operator-(const QuadElement& a, const QuadElement& b) { return a + (-b); }

QuadElement operator*(const QuadElement& a, const QuadElement& b) {
    require_same_order(a, b);
    const BigInt D = from_i64(a.order_.D());
    const BigInt n = from_i64(a.order_.w_norm());
    const BigInt yy = a.y_ * b.y_;
    return {a.order_, a.x_ * b.x_ - n * yy, a.x_ * b.y_ + b.x_ * a.y_ + D * yy, a.denom_ * b.denom_};
}

QuadElement operator/(const QuadElement& a, const QuadElement& b) { return a * b.inverse(); }

bool QuadElement::operator==(const QuadElement& other) const {
    return order_ == other.order_ && x_ == other.x_ && y_ == other.y_ && denom_ == other.denom_;
}

QuadElement pow(const QuadElement& base, unsigned exponent) {
    QuadElement result = QuadElement::from_integer(base.order(), 1);
    QuadElement b = base;
    while (exponent > 0) {
        if (exponent & 1) result = result * b;
        exponent >>= 1;
        if (exponent) b = b * b;
    }
    return result;
}

std::string to_sqrt_form(const QuadElement& a) {
    const auto [ra, rb] = a.sqrt_coordinates();
    std::ostringstream out;
    out << ra.get_str() << (rb < 0 ? " - " : " + ") << Rational(abs(rb)).get_str() << "*sqrt(" << a.order().squarefree_part()
        << ")";
    return out.str();
}

QuadElement parse_sqrt_form(const QuadOrder& order, const std::string& text) {
    std::string s = strip_spaces(text);
    // Normalize the UTF-8 middle dot to '*'.
    for (std::size_t pos; (pos = s.find("\xC2\xB7")) != std::string::npos;) s.replace(pos, 2, "*");
    if (s.empty()) throw ParseError("empty quadratic element");
    Rational a = 0, b = 0;
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in '" + text + "'");
        }
        first = false;
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') {
            if (s[j] == '(') {
                j = s.find(')', j);
                if (j == std::string::npos) throw ParseError("unbalanced parenthesis in '" + text + "'");
            }
            ++j;
        }
        const std::string term = s.substr(i, j - i);
        i = j;
        const std::size_t sq = term.find("sqrt(");
        if (sq == std::string::npos) {
            a += sign * parse_rational(term);
            continue;
        }
        Rational coeff = 1;
        if (sq > 0) {
            if (term[sq - 1] != '*') throw ParseError("expected '*' before sqrt in '" + text + "'");
            coeff = parse_rational(term.substr(0, sq - 1));
        }
        const std::size_t close = term.find(')', sq);
        if (close != term.size() - 1) throw ParseError("trailing characters after sqrt(...) in '" + text + "'");
        const i64 m = std::stoll(term.substr(sq + 5, close - sq - 5));
        if (m != order.squarefree_part()) {
            throw ParseError("sqrt(" + std::to_string(m) + ") does not belong to the order of discriminant " +
                             std::to_string(order.D()));
        }
        b += sign * coeff;
    }
    return QuadElement::from_sqrt_form(order, a, b);
}

std::string to_basis_form(const QuadElement& a) {
    std::ostringstream out;
    out << "(" << a.x().get_str() << ", " << a.y().get_str() << "; " << a.denom().get_str() << ")";
    return out.str();
}

QuadElement parse_basis_form(const QuadOrder& order, const std::string& text) {
    const std::string s = strip_spaces(text);
    const std::size_t comma = s.find(',');
    const std::size_t semi = s.find(';');
    if (s.size() < 7 || s.front() != '(' || s.back() != ')' || comma == std::string::npos ||
        semi == std::string::npos || semi < comma) {
        throw ParseError("expected '(x, y; denom)', got '" + text + "'");
    }
    BigInt x, y, d;
    if (x.set_str(s.substr(1, comma - 1), 10) != 0 || y.set_str(s.substr(comma + 1, semi - comma - 1), 10) != 0 ||
        d.set_str(s.substr(semi + 1, s.size() - semi - 2), 10) != 0) {
        throw ParseError("non-integer coordinate in '" + text + "'");
    }
    if (d <= 0) throw ParseError("denominator must be positive in '" + text + "'");
    return {order, x, y, d};
}

QuadElement fundamental_unit(i64 D) {
    if (D < 0) throw DomainError("fundamental_unit: D < 0 has no fundamental unit");
    const QuadOrder order(D);
    const u64 root = isqrt(static_cast<u64>(D));
    // Reduced start: theta = (b + sqrt(D))/2 with b = D (mod 2) and sqrt(D) - 2 < b < sqrt(D).
    i64 b = static_cast<i64>(root);
    if ((b - D) % 2 != 0) --b;
    i64 P = b, Q = 2;
    const i64 P0 = P, Q0 = Q;
    // epsilon = (X + Y sqrt(D)) / Z
    BigInt X = 1, Y = 0, Z = 1;
    do {
        BigInt nx = X * P + Y * from_i64(D);
        BigInt ny = X + Y * P;
        BigInt nz = Z * Q;
        const BigInt g = gcd(gcd(nx, ny), nz);
        X = nx / g;
        Y = ny / g;
        Z = nz / g;
        const i64 a = (P + static_cast<i64>(root)) / Q;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    } while (P != P0 || Q != Q0);
    // sqrt(D) = s * sqrt(m)
    const Rational ra(X, Z), rb(Y * from_i64(order.sqrt_scale()), Z);
    Rational ca = ra, cb = rb;
    ca.canonicalize();
    cb.canonicalize();
    return QuadElement::from_sqrt_form(order, ca, cb);
}

std::vector<QuadElement> torsion_units(const QuadOrder& order) {
    if (!order.is_imaginary()) throw DomainError("torsion_units: order must be imaginary");
    auto e = [&](i64 x, i64 y) { return QuadElement(order, from_i64(x), from_i64(y)); };
    if (order.D() == -4) return {e(1, 0), e(2, 1), e(-1, 0), e(-2, -1)};  // i = w + 2
    if (order.D() == -3) {
        // zeta6 = w + 2, zeta3 = w + 1
        return {e(1, 0), e(2, 1), e(1, 1), e(-1, 0), e(-2, -1), e(-1, -1)};
    }
    return {e(1, 0), e(-1, 0)};
}

UnitGroup unit_torsion(i64 D) {
    if (D > 0) throw DomainError("unit_torsion: D > 0 (use unit_group for real orders)");
    make_discriminant(D);
    UnitGroup g;
    g.torsion_order = D == -3 ? 6 : D == -4 ? 4 : 2;
    return g;
}

UnitGroup unit_group(i64 D) {
    if (D < 0) return unit_torsion(D);
    UnitGroup g;
    g.torsion_order = 2;
    g.fundamental_unit = fundamental_unit(D);
    return g;
}

}  // namespace cft
