#include "feuler/urational.hpp"

namespace feuler {

URational::URational(UPolynomial num, UPolynomial den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) {
        num_ = UPolynomial();
        den_ = UPolynomial::constant(Rational(1));
        return;
    }
    const UPolynomial g = UPolynomial::gcd(num, den);
    if (g.degree() > 0) {
        num = num.divided_exactly_by(g);
        den = den.divided_exactly_by(g);
    }
    const Rational lead = den.leading();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num = num.scale(inv);
        den = den.scale(inv);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

URational URational::operator-() const {
    URational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

URational URational::operator+(const URational& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // a/b + c/d with g = gcd(b, d) to keep intermediate degrees down.
    const UPolynomial g = UPolynomial::gcd(den_, o.den_);
    const UPolynomial b1 = g.degree() > 0 ? den_.divided_exactly_by(g) : den_;
    const UPolynomial d1 = g.degree() > 0 ? o.den_.divided_exactly_by(g) : o.den_;
    return URational(num_ * d1 + o.num_ * b1, den_ * d1);
}

URational URational::operator-(const URational& o) const { return *this + (-o); }

URational URational::operator*(const URational& o) const {
    if (is_zero() || o.is_zero()) return URational();
    // Cross-reduce before multiplying.
    const UPolynomial g1 = UPolynomial::gcd(num_, o.den_);
    const UPolynomial g2 = UPolynomial::gcd(o.num_, den_);
    const UPolynomial n1 = g1.degree() > 0 ? num_.divided_exactly_by(g1) : num_;
    const UPolynomial d2 = g1.degree() > 0 ? o.den_.divided_exactly_by(g1) : o.den_;
    const UPolynomial n2 = g2.degree() > 0 ? o.num_.divided_exactly_by(g2) : o.num_;
    const UPolynomial d1 = g2.degree() > 0 ? den_.divided_exactly_by(g2) : den_;
    return URational(n1 * n2, d1 * d2);
}

URational URational::operator/(const URational& o) const { return *this * o.inverse(); }

URational URational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero polynomial");
    return URational(den_, num_);
}

URational URational::pow(unsigned e) const {
    URational r(1);
    URational base = *this;
    while (e != 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Rational URational::eval(const Rational& u_val) const {
    const Rational dv = den_.eval(u_val);
    if (dv.is_zero()) {
        if (u_val == Rational(1)) throw std::domain_error("pole at u = 1");
        throw std::domain_error("pole at u = " + u_val.str());
    }
    return num_.eval(u_val) / dv;
}

std::string URational::str() const {
    if (is_zero()) return "0";
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace feuler
