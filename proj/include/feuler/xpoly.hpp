#pragma once

#include <string>
#include <utility>
#include <vector>

#include "feuler/urational.hpp"

namespace feuler {

// Polynomial in x whose coefficients are rational functions of u. Houses the
// two-variable polynomials produced by the binomial convolution and the
// generating-function engine. Coefficients ascending by power of x, trailing
// zeros trimmed, zero polynomial = empty sequence.
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(std::vector<URational> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit XPolynomial(const URational& constant) : c_{constant} { trim(); }
    explicit XPolynomial(const Rational& constant) : c_{URational(constant)} { trim(); }

    static XPolynomial x() { return XPolynomial(std::vector<URational>{URational(0), URational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    URational coeff(int k) const {
        if (k < 0 || k > degree()) return URational(0);
        return c_[static_cast<size_t>(k)];
    }

    const std::vector<URational>& coeffs() const { return c_; }

    XPolynomial operator+(const XPolynomial& o) const;
    XPolynomial operator-(const XPolynomial& o) const;
    XPolynomial operator*(const XPolynomial& o) const;
    XPolynomial scale(const URational& s) const;

    bool operator==(const XPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const XPolynomial& o) const { return !(*this == o); }

    // d/dx, exact.
    XPolynomial derivative() const;

    // Inverse of a constant polynomial; throws std::domain_error otherwise.
    XPolynomial inverse() const;

    // Substitute a rational u value coefficient-wise; result indexed by power
    // of x. Throws on a pole of any coefficient.
    std::vector<Rational> coeffs_at_u(const Rational& u_val) const;

    // Full evaluation at exact (u, x).
    Rational eval(const Rational& u_val, const Rational& x_val) const;

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<URational> c_;
};

}  // namespace feuler
