#pragma once

#include <string>
#include <utility>

#include "feuler/upoly.hpp"

namespace feuler {

// Rational function of u in canonical form: gcd(num, den) = 1 over the
// rationals and den monic. Zero is 0/1. Canonical form makes equality of
// algebraically equal values structural.
class URational {
public:
    URational() : den_(UPolynomial::constant(Rational(1))) {}
    URational(long n) : URational(Rational(n)) {}
    URational(int n) : URational(Rational(n)) {}
    URational(const Rational& r)
        : num_(r.is_zero() ? UPolynomial() : UPolynomial::constant(r)),
          den_(UPolynomial::constant(Rational(1))) {}

    // Reduces to canonical form. Throws std::domain_error("division by zero
    // polynomial") when den is identically zero.
    URational(UPolynomial num, UPolynomial den);

    static URational u() { return URational(UPolynomial::variable(), UPolynomial::constant(Rational(1))); }

    const UPolynomial& num() const { return num_; }
    const UPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    // Value as a plain Rational; only valid for constants.
    Rational constant_value() const {
        if (!is_constant()) throw std::logic_error("not a constant rational function");
        return num_.coeff(0);
    }

    URational operator-() const;
    URational operator+(const URational& o) const;
    URational operator-(const URational& o) const;
    URational operator*(const URational& o) const;
    URational operator/(const URational& o) const;
    URational& operator+=(const URational& o) { *this = *this + o; return *this; }
    URational& operator-=(const URational& o) { *this = *this - o; return *this; }
    URational& operator*=(const URational& o) { *this = *this * o; return *this; }

    URational inverse() const;
    URational pow(unsigned e) const;

    bool operator==(const URational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const URational& o) const { return !(*this == o); }

    // Exact evaluation. Throws std::domain_error("pole at u = 1") when the
    // denominator vanishes at u_val = 1 (the only pole of the values this
    // toolkit produces), and a generic pole error otherwise.
    Rational eval(const Rational& u_val) const;

    // Canonical text form, e.g. "(1 + u)/(1 - 2*u + u^2)"; the "/(...)" part
    // is omitted when the denominator is 1.
    std::string str() const;

private:
    UPolynomial num_;
    UPolynomial den_;
};

inline URational operator*(const Rational& r, const URational& x) { return URational(r) * x; }

}  // namespace feuler
