#include "lsca/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lsca {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

unsigned lcm_conductor(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm(a, b));
}

namespace {

// Exact division of integer polynomials (ascending coefficients), assuming
// the divisor is monic and the division is exact.
std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dn = num.size() - 1;
    const std::size_t dd = den.size() - 1;
    std::vector<long> quo(dn - dd + 1, 0);
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        const long c = num[k + dd];
        quo[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (long v : num)
        if (v != 0) throw error("cyclotomic_polynomial: inexact polynomial division");
    return quo;
}

std::vector<long> cyclotomic_uncached(unsigned m) {
    if (m == 1) return {-1, 1};  // x - 1
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    std::vector<long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

// Per-conductor data: Phi_m and the representations of zeta^k in the basis
// {1, zeta, ..., zeta^{phi-1}} for every exponent that arithmetic can need.
struct CycContext {
    unsigned phi = 0;
    std::vector<long> phi_poly;
    std::vector<std::vector<Rat>> zeta_pow;  // k in [0, 2m)
};

const CycContext& context(unsigned m) {
    static std::map<unsigned, CycContext> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    CycContext ctx;
    ctx.phi = euler_phi(m);
    ctx.phi_poly = cyclotomic_polynomial(m);
    std::vector<Rat> cur(ctx.phi, Rat(0));
    if (ctx.phi > 0) cur[0] = 1;
    const std::size_t maxk = 2 * static_cast<std::size_t>(m);
    ctx.zeta_pow.reserve(maxk);
    for (std::size_t k = 0; k < maxk; ++k) {
        ctx.zeta_pow.push_back(cur);
        // multiply by zeta: shift, then eliminate the zeta^phi overflow using
        // zeta^phi = -sum_{i<phi} phi_poly[i] zeta^i (Phi_m is monic).
        std::vector<Rat> next(ctx.phi, Rat(0));
        Rat carry = ctx.phi == 0 ? Rat(0) : cur[ctx.phi - 1];
        for (unsigned i = ctx.phi; i-- > 1;) next[i] = cur[i - 1];
        if (carry != 0)
            for (unsigned i = 0; i < ctx.phi; ++i)
                next[i] -= carry * Rat(ctx.phi_poly[i]);
        cur = std::move(next);
    }
    return cache.emplace(m, std::move(ctx)).first->second;
}

using Poly = std::vector<Rat>;  // ascending, arbitrary degree

Poly poly_mod_phi(const Poly& p, unsigned m) {
    const CycContext& ctx = context(m);
    Poly out(ctx.phi, Rat(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        const std::vector<Rat>& zk = ctx.zeta_pow.at(k);
        for (unsigned i = 0; i < ctx.phi; ++i) out[i] += p[k] * zk[i];
    }
    return out;
}

int poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

// Extended Euclid over Q[x]: returns u with u*a + v*b = gcd, gcd normalized
// monic. Only u and the gcd are needed (inversion modulo Phi_m).
std::pair<Poly, Poly> poly_ext_gcd_u(Poly a, Poly b) {
    Poly u0 = {Rat(1)}, u1 = {};
    auto scale = [](Poly p, const Rat& c) {
        for (Rat& x : p) x *= c;
        return p;
    };
    auto sub = [](Poly p, const Poly& q) {
        if (p.size() < q.size()) p.resize(q.size(), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i) p[i] -= q[i];
        return p;
    };
    auto shift = [](const Poly& p, std::size_t k) {
        Poly out(p.size() + k, Rat(0));
        for (std::size_t i = 0; i < p.size(); ++i) out[i + k] = p[i];
        return out;
    };
    while (poly_degree(b) >= 0) {
        // divide a by b: a = q*b + r, tracking u
        Poly r = a, uq = u0;
        int db = poly_degree(b);
        Rat lead_b = b[static_cast<std::size_t>(db)];
        while (poly_degree(r) >= db) {
            int dr = poly_degree(r);
            Rat c = r[static_cast<std::size_t>(dr)] / lead_b;
            std::size_t k = static_cast<std::size_t>(dr - db);
            r = sub(std::move(r), scale(shift(b, k), c));
            uq = sub(std::move(uq), scale(shift(u1, k), c));
        }
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(uq);
    }
    int da = poly_degree(a);
    if (da >= 0 && a[static_cast<std::size_t>(da)] != 1) {
        Rat inv = 1 / a[static_cast<std::size_t>(da)];
        a = scale(std::move(a), inv);
        u0 = scale(std::move(u0), inv);
    }
    return {u0, a};
}

std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace

std::vector<long> cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw error("cyclotomic_polynomial: conductor must be positive");
    static std::map<unsigned, std::vector<long>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    std::vector<long> result = cyclotomic_uncached(m);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(result)).first->second;
}

CycScalar::CycScalar(const Rat& r) : m_(1), c_{r} { c_[0].canonicalize(); }

void CycScalar::normalize() {
    if (m_ == 1) return;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    Rat v = c_.empty() ? Rat(0) : c_[0];
    m_ = 1;
    c_ = {v};
}

CycScalar CycScalar::root_of_unity(unsigned m, long power) {
    if (m == 0) throw error("root_of_unity: conductor must be positive");
    long k = power % static_cast<long>(m);
    if (k < 0) k += static_cast<long>(m);
    CycScalar out(m, context(m).zeta_pow.at(static_cast<std::size_t>(k)));
    out.normalize();
    return out;
}

bool CycScalar::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycScalar::is_one() const { return m_ == 1 && c_[0] == 1; }

Rat CycScalar::rational_value() const {
    if (m_ != 1) throw error("rational_value: " + str() + " is not rational");
    return c_[0];
}

std::size_t CycScalar::support() const {
    std::size_t n = 0;
    for (const Rat& x : c_)
        if (x != 0) ++n;
    return n;
}

CycScalar CycScalar::promoted(unsigned M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw error("promoted: conductor does not divide target");
    const std::size_t step = M / m_;
    Poly p(static_cast<std::size_t>(M), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
    return CycScalar(M, poly_mod_phi(p, M));
}

CycScalar CycScalar::operator-() const {
    CycScalar out = *this;
    for (Rat& x : out.c_) x = -x;
    return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    unsigned M = lcm_conductor(m_, o.m_);
    CycScalar a = promoted(M), b = o.promoted(M);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.normalize();
    return *this = std::move(a);
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    unsigned M = lcm_conductor(m_, o.m_);
    CycScalar a = promoted(M), b = o.promoted(M);
    if (M == 1) {
        a.c_[0] *= b.c_[0];
        return *this = std::move(a);
    }
    Poly prod(a.c_.size() + b.c_.size(), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    CycScalar out(M, poly_mod_phi(prod, M));
    out.normalize();
    return *this = std::move(out);
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw error("inverse: division by zero");
    if (m_ == 1) return CycScalar(Rat(1) / c_[0]);
    Poly phi_poly;
    for (long v : context(m_).phi_poly) phi_poly.push_back(Rat(v));
    auto [u, g] = poly_ext_gcd_u(Poly(c_.begin(), c_.end()), phi_poly);
    if (poly_degree(g) != 0)
        throw error("inverse: element is not invertible modulo the cyclotomic polynomial");
    CycScalar out(m_, poly_mod_phi(u, m_));
    out.normalize();
    return out;
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
    if (o.is_zero()) throw error("divide: division by zero (" + str() + " / 0)");
    return *this *= o.inverse();
}

CycScalar CycScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycScalar base = *this, out(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) out *= base;
        if (k >>= 1) base *= base;
    }
    return out;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    unsigned M = lcm_conductor(a.m_, b.m_);
    return a.promoted(M).c_ == b.promoted(M).c_;
}

std::string CycScalar::str() const {
    if (m_ == 1) return rat_str(c_[0]);
    std::ostringstream out;
    bool first = true;
    for (std::size_t e = c_.size(); e-- > 0;) {
        const Rat& c = c_[e];
        if (c == 0) continue;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << rat_str(mag);
            continue;
        }
        if (mag != 1) out << rat_str(mag) << "*";
        out << "z" << m_;
        if (e >= 2) out << "^" << e;
    }
    if (first) return "0";
    return out.str();
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw error("parse scalar \"" + std::string(s) + "\": " + what);
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return std::string(s.substr(start, pos - start));
    }
    Rat rational() {
        Rat num(digits(), 10);
        if (peek() == '/') {
            ++pos;
            Rat den(digits(), 10);
            if (den == 0) fail("zero denominator");
            num /= den;
        }
        num.canonicalize();
        return num;
    }

    // term := rational ['*' zpart] | zpart
    CycScalar term() {
        if (peek() == 'z') return zpart();
        Rat c = rational();
        if (peek() == '*') {
            ++pos;
            if (peek() != 'z') fail("expected root of unity after '*'");
            return CycScalar(c) * zpart();
        }
        return CycScalar(c);
    }
    CycScalar zpart() {
        ++pos;  // consume 'z'
        unsigned long m = 0;
        long e = 1;
        try {
            m = std::stoul(digits());
            if (peek() == '^') {
                ++pos;
                e = std::stol(digits());
            }
        } catch (const std::out_of_range&) {
            fail("number out of range");
        }
        if (m == 0) fail("conductor must be positive");
        return CycScalar::root_of_unity(static_cast<unsigned>(m), e);
    }

    CycScalar run() {
        CycScalar acc(0);
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = (c == '-');
            ++pos;
        }
        while (true) {
            CycScalar t = term();
            acc += negate ? -t : t;
            if (eof()) break;
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negate = (op == '-');
            ++pos;
        }
        return acc;
    }
};

}  // namespace

CycScalar CycScalar::parse(std::string_view text) {
    Parser p{text};
    if (p.eof()) throw error("parse scalar: empty input");
    return p.run();
}

}  // namespace lsca
