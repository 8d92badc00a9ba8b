#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace feuler {

// Arbitrary-precision rational, kept in canonical form at all times:
// gcd(|numerator|, denominator) = 1, denominator > 0, zero stored as 0/1.
// Immutable-by-convention value type; all operators return fresh values.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("division by zero");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("division by zero");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) {
        if (v_.get_den() == 0) throw std::domain_error("division by zero");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional leading minus.
    static Rational parse(const std::string& text);

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(f);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(1 / v_));
    }

    double to_double() const { return v_.get_d(); }

    // "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Pascal triangle of binomial coefficients C(n, l), rows 0..n_max.
std::vector<std::vector<Rational>> binomial_triangle(int n_max);

}  // namespace feuler
