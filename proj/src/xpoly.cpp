#include "feuler/xpoly.hpp"

#include <sstream>

namespace feuler {

XPolynomial XPolynomial::operator+(const XPolynomial& o) const {
    std::vector<URational> c(std::max(c_.size(), o.c_.size()), URational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return XPolynomial(std::move(c));
}

XPolynomial XPolynomial::operator-(const XPolynomial& o) const {
    std::vector<URational> c(std::max(c_.size(), o.c_.size()), URational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return XPolynomial(std::move(c));
}

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
    if (is_zero() || o.is_zero()) return XPolynomial();
    std::vector<URational> c(c_.size() + o.c_.size() - 1, URational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return XPolynomial(std::move(c));
}

XPolynomial XPolynomial::scale(const URational& s) const {
    if (s.is_zero()) return XPolynomial();
    std::vector<URational> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(v * s);
    return XPolynomial(std::move(c));
}

XPolynomial XPolynomial::derivative() const {
    if (degree() < 1) return XPolynomial();
    std::vector<URational> c;
    c.reserve(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * URational(static_cast<long>(k)));
    return XPolynomial(std::move(c));
}

XPolynomial XPolynomial::inverse() const {
    if (is_zero() || degree() > 0) throw std::domain_error("polynomial not invertible");
    return XPolynomial(c_[0].inverse());
}

std::vector<Rational> XPolynomial::coeffs_at_u(const Rational& u_val) const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.eval(u_val));
    return out;
}

Rational XPolynomial::eval(const Rational& u_val, const Rational& x_val) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x_val + it->eval(u_val);
    return acc;
}

std::string XPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const URational& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const std::string cs = c.str();
        const bool atomic = cs.find(' ') == std::string::npos && cs.find('/') == std::string::npos;
        if (k == 0) {
            out << (atomic ? cs : "(" + cs + ")");
        } else {
            if (!c.is_one()) out << (atomic ? cs : "(" + cs + ")") << "*";
            out << "x";
            if (k >= 2) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace feuler
