#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "feuler/rational.hpp"

namespace feuler {

// Univariate polynomial in u with Rational coefficients, stored ascending by
// power with trailing zeros trimmed. The zero polynomial is the empty
// coefficient sequence, so degree() == -1 acts as the degree(0) sentinel.
class UPolynomial {
public:
    UPolynomial() = default;
    explicit UPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPolynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UPolynomial constant(const Rational& r) { return UPolynomial({r}); }
    static UPolynomial variable() { return UPolynomial({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<Rational>& coeffs() const { return c_; }

    // Coefficient of u^k; zero beyond the stored degree.
    Rational coeff(int k) const {
        if (k < 0 || k > degree()) return Rational(0);
        return c_[static_cast<size_t>(k)];
    }

    const Rational& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    UPolynomial operator-() const;
    UPolynomial operator+(const UPolynomial& o) const;
    UPolynomial operator-(const UPolynomial& o) const;
    UPolynomial operator*(const UPolynomial& o) const;
    UPolynomial scale(const Rational& r) const;
    UPolynomial pow(unsigned e) const;

    bool operator==(const UPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const UPolynomial& o) const { return c_ != o.c_; }

    Rational eval(const Rational& u) const;

    // Quotient/remainder over the rationals. Divisor must be nonzero.
    static std::pair<UPolynomial, UPolynomial> divmod(const UPolynomial& a, const UPolynomial& b);

    // Exact quotient; throws std::logic_error on a nonzero remainder.
    UPolynomial divided_exactly_by(const UPolynomial& d) const;

    // Monic gcd over the rationals, computed with integer content/primitive
    // parts and a primitive pseudo-remainder sequence (keeps coefficient
    // growth bounded and the result canonical). gcd(0, 0) = 0.
    static UPolynomial gcd(const UPolynomial& a, const UPolynomial& b);

    // Ascending rendering, e.g. "1 - 2*u + u^2" or "1/2 + 1/2*u"; zero is "0".
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace feuler
