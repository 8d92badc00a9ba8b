#include "feuler/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace feuler {

namespace {

// Integer polynomial, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;  // 0 for the zero polynomial
}

// Divide out the content and force a positive leading coefficient.
ZPoly zprimitive(ZPoly p) {
    ztrim(p);
    if (p.empty()) return p;
    mpz_class g = zcontent(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

// Clear denominators: q * lcm(dens) as an integer polynomial.
ZPoly clear_denominators(const UPolynomial& q) {
    mpz_class l = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly p;
    p.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) p.push_back(c.num() * (l / c.den()));
    ztrim(p);
    return p;
}

// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b.
ZPoly zprem(ZPoly r, const ZPoly& b) {
    const auto db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        const mpz_class lr = r.back();
        const size_t shift = r.size() - b.size();
        for (auto& c : r) c *= lb;
        for (size_t i = 0; i < db + 1; ++i) r[shift + i] -= lr * b[i];
        ztrim(r);
    }
    return r;
}

UPolynomial monic_from_z(const ZPoly& p) {
    if (p.empty()) return UPolynomial();
    std::vector<Rational> c;
    c.reserve(p.size());
    const mpz_class& lead = p.back();
    for (const auto& z : p) c.emplace_back(Rational(z, lead));
    return UPolynomial(std::move(c));
}

}  // namespace

UPolynomial UPolynomial::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(-v);
    return UPolynomial(std::move(c));
}

UPolynomial UPolynomial::operator+(const UPolynomial& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UPolynomial(std::move(c));
}

UPolynomial UPolynomial::operator-(const UPolynomial& o) const { return *this + (-o); }

UPolynomial UPolynomial::operator*(const UPolynomial& o) const {
    if (is_zero() || o.is_zero()) return UPolynomial();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UPolynomial(std::move(c));
}

UPolynomial UPolynomial::scale(const Rational& r) const {
    if (r.is_zero()) return UPolynomial();
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v * r);
    return UPolynomial(std::move(c));
}

UPolynomial UPolynomial::pow(unsigned e) const {
    UPolynomial r = constant(Rational(1));
    UPolynomial base = *this;
    while (e != 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Rational UPolynomial::eval(const Rational& u) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

std::pair<UPolynomial, UPolynomial> UPolynomial::divmod(const UPolynomial& a, const UPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot;
    const int db = b.degree();
    if (a.degree() >= db) quot.assign(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    const Rational lb_inv = b.leading().inverse();
    int dr = a.degree();
    while (dr >= db) {
        while (dr >= 0 && rem[static_cast<size_t>(dr)].is_zero()) --dr;
        if (dr < db) break;
        const Rational q = rem[static_cast<size_t>(dr)] * lb_inv;
        const size_t shift = static_cast<size_t>(dr - db);
        quot[shift] = q;
        for (int i = 0; i <= db; ++i) rem[shift + static_cast<size_t>(i)] -= q * b.c_[static_cast<size_t>(i)];
    }
    return {UPolynomial(std::move(quot)), UPolynomial(std::move(rem))};
}

UPolynomial UPolynomial::divided_exactly_by(const UPolynomial& d) const {
    auto [q, r] = divmod(*this, d);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

UPolynomial UPolynomial::gcd(const UPolynomial& a, const UPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return UPolynomial();
    if (a.is_zero()) return monic_from_z(zprimitive(clear_denominators(b)));
    if (b.is_zero()) return monic_from_z(zprimitive(clear_denominators(a)));

    ZPoly p = zprimitive(clear_denominators(a));
    ZPoly q = zprimitive(clear_denominators(b));
    if (p.size() < q.size()) std::swap(p, q);
    // Primitive PRS: each pseudo-remainder is reduced to its primitive part.
    while (!q.empty()) {
        ZPoly r = zprimitive(zprem(p, q));
        p = std::move(q);
        q = std::move(r);
    }
    return monic_from_z(p);
}

std::string UPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        const Rational a = abs(c);
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a.str();
        } else {
            if (!a.is_one()) out << a.str() << "*";
            out << "u";
            if (k >= 2) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace feuler
