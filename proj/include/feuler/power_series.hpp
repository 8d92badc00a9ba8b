#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "feuler/rational.hpp"

namespace feuler {

// Truncated formal power series in t over an exact coefficient ring C.
// C must be copyable, constructible from Rational, and provide +, -, *, ==,
// is_zero() and inverse(). The truncation order is inclusive: a series of
// order d stores d+1 coefficients. Binary operations truncate at the minimum
// of the operand orders; coefficients beyond the stored order are never
// fabricated.
template <typename C>
class PowerSeries {
public:
    explicit PowerSeries(int order) : order_(check_order(order)), c_(static_cast<size_t>(order) + 1, C(Rational(0))) {}

    PowerSeries(int order, std::vector<C> coeffs) : order_(check_order(order)), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<size_t>(order_) + 1)
            throw std::invalid_argument("coefficient count must be order + 1");
    }

    static PowerSeries one(int order) {
        PowerSeries s(order);
        s.c_[0] = C(Rational(1));
        return s;
    }

    int order() const { return order_; }

    const C& coeff(int k) const {
        if (k < 0 || k > order_) throw std::out_of_range("series coefficient index");
        return c_[static_cast<size_t>(k)];
    }

    void set_coeff(int k, C v) {
        if (k < 0 || k > order_) throw std::out_of_range("series coefficient index");
        c_[static_cast<size_t>(k)] = std::move(v);
    }

    PowerSeries operator+(const PowerSeries& o) const {
        const int d = std::min(order_, o.order_);
        PowerSeries r(d);
        for (int k = 0; k <= d; ++k) r.c_[k] = c_[k] + o.c_[k];
        return r;
    }

    PowerSeries operator-(const PowerSeries& o) const {
        const int d = std::min(order_, o.order_);
        PowerSeries r(d);
        for (int k = 0; k <= d; ++k) r.c_[k] = c_[k] - o.c_[k];
        return r;
    }

    // Cauchy product truncated at the minimum operand order.
    PowerSeries operator*(const PowerSeries& o) const {
        const int d = std::min(order_, o.order_);
        PowerSeries r(d);
        for (int k = 0; k <= d; ++k) {
            C acc = C(Rational(0));
            for (int j = 0; j <= k; ++j) acc = acc + c_[j] * o.c_[static_cast<size_t>(k - j)];
            r.c_[k] = acc;
        }
        return r;
    }

    // Multiplicative inverse up to the truncation order. Requires an
    // invertible constant term; otherwise throws
    // std::domain_error("series not invertible").
    PowerSeries reciprocal() const {
        if (c_[0].is_zero()) throw std::domain_error("series not invertible");
        C b0 = [&] {
            try {
                return c_[0].inverse();
            } catch (const std::domain_error&) {
                throw std::domain_error("series not invertible");
            }
        }();
        PowerSeries r(order_);
        r.c_[0] = b0;
        for (int n = 1; n <= order_; ++n) {
            C acc = C(Rational(0));
            for (int k = 1; k <= n; ++k) acc = acc + c_[k] * r.c_[static_cast<size_t>(n - k)];
            r.c_[n] = C(Rational(0)) - b0 * acc;
        }
        return r;
    }

    bool operator==(const PowerSeries& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const PowerSeries& o) const { return !(*this == o); }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        return order;
    }

    int order_;
    std::vector<C> c_;
};

// e^{c t} as a series: coefficient of t^k is c^k / k!.
template <typename C>
PowerSeries<C> exp_linear(const C& c, int order) {
    PowerSeries<C> r(order);
    C power = C(Rational(1));
    Rational inv_fact(1);
    r.set_coeff(0, power);
    for (int k = 1; k <= order; ++k) {
        power = power * c;
        inv_fact = inv_fact / Rational(k);
        r.set_coeff(k, power * C(inv_fact));
    }
    return r;
}

}  // namespace feuler
