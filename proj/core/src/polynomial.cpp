#include "cft/polynomial.hpp"

#include "cft/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cft {

IntPolynomial make_polynomial(std::vector<i64> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return IntPolynomial{std::move(coeffs)};
}

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) {
        for (char ch : text) {
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
        }
    }

    IntPolynomial parse() {
        if (s_.empty()) fail("empty polynomial");
        std::vector<i64> coeffs;
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            i64 coeff = 1;
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = number();
                have_coeff = true;
                if (peek() == '*') {
                    get();
                    if (peek() != 'x') fail("expected 'x' after '*'");
                }
            }
            unsigned exponent = 0;
            if (peek() == 'x') {
                get();
                exponent = 1;
                if (peek() == '^') {
                    get();
                    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                    exponent = static_cast<unsigned>(number());
                }
            } else if (!have_coeff) {
                fail("expected a term");
            }
            if (exponent > 64) fail("exponent too large");
            if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
            coeffs[exponent] += sign * coeff;
        }
        return make_polynomial(std::move(coeffs));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    i64 number() {
        i64 v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (v > (INT64_MAX - 9) / 10) fail("coefficient too large");
            v = v * 10 + (get() - '0');
        }
        return v;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
    }

    std::string s_;
    std::size_t pos_ = 0;
};

// Bareiss fraction-free determinant.
BigInt determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

IntPolynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

std::string to_string(const IntPolynomial& f) {
    if (f.coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = f.degree(); e >= 0; --e) {
        const i64 c = f.coeffs[e];
        if (c == 0) continue;
        const u64 mag = c < 0 ? u64{0} - static_cast<u64>(c) : static_cast<u64>(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        first = false;
        if (mag != 1 || e == 0) out << mag;
        if (e >= 1) out << "x";
        if (e >= 2) out << "^" << e;
    }
    return out.str();
}

BigInt evaluate(const IntPolynomial& f, const BigInt& x) {
    BigInt acc = 0;
    for (int e = f.degree(); e >= 0; --e) acc = acc * x + from_i64(f.coeffs[e]);
    return acc;
}

BigInt discriminant(const IntPolynomial& f) {
    const int n = f.degree();
    if (n < 1) throw DomainError("discriminant: polynomial must have positive degree");
    if (n == 1) return 1;
    std::vector<BigInt> df;
    for (int e = 1; e <= n; ++e) df.push_back(from_i64(f.coeffs[e]) * e);
    const int m = n - 1;
    const int size = n + m;
    std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size, 0));
    for (int r = 0; r < m; ++r) {
        for (int e = 0; e <= n; ++e) syl[r][r + (n - e)] = from_i64(f.coeffs[e]);
    }
    for (int r = 0; r < n; ++r) {
        for (int e = 0; e <= m; ++e) syl[m + r][r + (m - e)] = df[e];
    }
    const BigInt res = determinant(std::move(syl));
    BigInt disc = res / from_i64(f.leading());
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

namespace fp {

void normalize(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const IntPolynomial& f, u64 p) {
    Poly r(f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) r[i] = reduce_mod(f.coeffs[i], p);
    normalize(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const u64 x = i < a.size() ? a[i] : 0;
        const u64 y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    normalize(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
    normalize(r);
    return r;
}

namespace {

// Long division; returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(Poly a, const Poly& g, u64 p) {
    if (g.empty()) throw DomainError("polynomial division by zero");
    normalize(a);
    const int dg = degree(g);
    if (degree(a) < dg) return {{}, a};
    Poly q(a.size() - g.size() + 1, 0);
    const u64 inv_lead = inverse_mod(static_cast<i64>(g.back()), p);
    for (int i = degree(a); i >= dg; --i) {
        const u64 c = mul_mod(a[i], inv_lead, p);
        if (c == 0) continue;
        q[i - dg] = c;
        for (int j = 0; j <= dg; ++j) a[i - dg + j] = (a[i - dg + j] + p - mul_mod(c, g[j], p)) % p;
    }
    normalize(a);
    normalize(q);
    return {q, a};
}

}  // namespace

Poly mod(const Poly& a, const Poly& g, u64 p) { return divmod(a, g, p).second; }
Poly div(const Poly& a, const Poly& g, u64 p) { return divmod(a, g, p).first; }

Poly monic(const Poly& f, u64 p) {
    if (f.empty()) return f;
    const u64 inv = inverse_mod(static_cast<i64>(f.back()), p);
    Poly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul_mod(f[i], inv, p);
    return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly derivative(const Poly& f, u64 p) {
    if (f.size() <= 1) return {};
    Poly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul_mod(f[i], i % p, p);
    normalize(d);
    return d;
}

Poly pow_mod(const Poly& base, u64 e, const Poly& g, u64 p) {
    Poly result = mod(Poly{1}, g, p);
    Poly b = mod(base, g, p);
    while (e > 0) {
        if (e & 1) result = mod(mul(result, b, p), g, p);
        e >>= 1;
        if (e) b = mod(mul(b, b, p), g, p);
    }
    return result;
}

u64 evaluate(const Poly& f, u64 x, u64 p) {
    u64 acc = 0;
    for (int i = degree(f); i >= 0; --i) acc = (mul_mod(acc, x, p) + f[i]) % p;
    return acc;
}

bool is_squarefree(const Poly& f, u64 p) {
    if (degree(f) <= 0) return true;
    return degree(gcd(f, derivative(f, p), p)) == 0;
}

bool has_root(const Poly& f, u64 p) {
    if (degree(f) < 1) return false;
    const Poly xp = pow_mod(Poly{0, 1}, p, f, p);
    return degree(gcd(f, sub(xp, Poly{0, 1}, p), p)) > 0;
}

std::vector<int> factor_degrees(const Poly& f, u64 p) {
    std::vector<int> degrees;
    Poly g = monic(f, p);
    const Poly x{0, 1};
    Poly h = mod(x, g, p);
    for (int i = 1; degree(g) >= 2 * i; ++i) {
        h = pow_mod(h, p, g, p);  // h = x^(p^i) mod g
        const Poly block = gcd(g, sub(h, x, p), p);
        const int d = degree(block);
        if (d > 0) {
            for (int k = 0; k < d / i; ++k) degrees.push_back(i);
            g = div(g, block, p);
            h = mod(h, g, p);
        }
    }
    if (degree(g) > 0) degrees.push_back(degree(g));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace fp

}  // namespace cft
