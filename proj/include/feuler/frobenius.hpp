#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "feuler/report.hpp"
#include "feuler/xpoly.hpp"

namespace feuler {

// Frobenius-Euler numbers H_0(u)..H_{n_max}(u), built from the recurrence
//   sum_{l=0}^{n} C(n,l) H_l(u) - u H_n(u) = (1-u) [n = 0]
// solved bottom-up as H_n(u) = (sum_{l<n} C(n,l) H_l(u)) / (u - 1).
// Every entry with n >= 1 has denominator dividing (u-1)^n.
class FrobeniusNumberTable {
public:
    explicit FrobeniusNumberTable(int n_max);

    int max_index() const { return static_cast<int>(values_.size()) - 1; }

    const URational& at(int n) const {
        if (n < 0 || n > max_index()) throw std::out_of_range("Frobenius-Euler table index");
        return values_[static_cast<size_t>(n)];
    }

private:
    std::vector<URational> values_;
};

// H_n(x, u) = sum_{l=0}^{n} C(n,l) x^{n-l} H_l(u); monic of degree n in x.
XPolynomial fe_polynomial(int n, const FrobeniusNumberTable& table);

// Exact evaluation of a two-variable polynomial; u first, then x.
// Throws std::domain_error("pole at u = 1") when u_val = 1.
Rational fe_eval(const XPolynomial& p, const Rational& u_val, const Rational& x_val);

// The u = -1 specialization: Euler numbers E_n and the coefficient lists of
// the Euler polynomials E_n(x) (ascending powers of x).
struct EulerSequence {
    std::vector<Rational> numbers;
    std::vector<std::vector<Rational>> polynomials;
};
EulerSequence euler_sequence(int n_max);

// Independent generating-function oracle: entry n is n! times the t^n
// coefficient of e^{xt} * reciprocal((e^t - u)/(1 - u)), expanded with the
// generic series engine. Shares no code path with fe_polynomial.
std::vector<XPolynomial> gf_oracle(int n_max);

// Series oracle for the Euler side: n! times the t^n coefficients of
// reciprocal((e^t + 1)/2) and of e^{xt} * reciprocal((e^t + 1)/2).
std::vector<Rational> euler_numbers_oracle(int n_max);
std::vector<std::vector<Rational>> euler_polynomials_oracle(int n_max);

// Symbolic checks. Valid ids: "recurrence-eq26", "lemma1",
// "appell-derivative", "oracle-match", "euler-specialization",
// "eq25-values". Verdict is pass iff the residual is identically zero.
// Throws std::invalid_argument on an unknown id.
std::vector<VerificationReport> check_frobenius(std::string_view id, int n_max);

const std::vector<std::string>& frobenius_check_ids();

}  // namespace feuler
