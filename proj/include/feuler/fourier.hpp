#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "feuler/frobenius.hpp"
#include "feuler/report.hpp"

namespace feuler {

// Fourier coefficient of the degree-m Frobenius-Euler polynomial over [0,1]
// against e^{-(2n+1) pi i x}, represented as a polynomial in the formal
// symbol w = 1/((2n+1) pi i). The frequency index n is not stored: one
// WPolynomial serves every n. There is never a w^0 term.
class WPolynomial {
public:
    WPolynomial() = default;
    explicit WPolynomial(std::vector<URational> coeffs_from_w1);

    // Coefficient of w^j, j >= 1; zero beyond the top index.
    URational c(int j) const;

    int top_index() const { return static_cast<int>(c_.size()); }

    bool operator==(const WPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const WPolynomial& o) const { return !(*this == o); }

    // e.g. "2*w" or "(1 + u)/(-1 + u)*w + 2*w^2".
    std::string str() const;

private:
    std::vector<URational> c_;  // c_[j-1] = coefficient of w^j
};

// Exact coefficient via the integration-by-parts recursion
//   a^(0) = 2w,   a^(m) = (u+1) H_m(u) w + m w a^(m-1)
// (the boundary term uses H_m(1,u) = u H_m(u) and e^{-(2n+1) pi i} = -1).
WPolynomial fourier_coeff_exact(int m, const FrobeniusNumberTable& table);

// Unrolled closed form of the same recursion: c_j = m!/(m+1-j)! (u+1)
// H_{m+1-j}(u) for 1 <= j <= m and c_{m+1} = 2 m!. Used as a structural
// cross-check against the recursion output.
WPolynomial fourier_coeff_closed_form(int m, const FrobeniusNumberTable& table);

// Numeric value of a coefficient at frequency index n and exact u.
std::complex<double> fourier_coeff_eval(const WPolynomial& c, long n, const Rational& u_val);

// Independent oracle: the defining integral of H_m(x,u) e^{-(2n+1) i pi x}
// over [0,1], by composite Gauss-Legendre quadrature (32 nodes per panel,
// panel count scaled with the oscillation frequency, error estimated against
// the doubled panel count). Throws std::runtime_error with the achieved
// estimate when tol cannot be met.
std::complex<double> fourier_coeff_quadrature(int m, long n, const Rational& u_val, double tol,
                                              const FrobeniusNumberTable& table);

// Symmetric partial sum  sum_{n=-N}^{N-1} a_n^(m)(u) e^{(2n+1) pi i x}.
// Terms are accumulated as conjugate pairs (n, -n-1) in increasing n >= 0
// order; the pairing is part of the contract, it makes sums of real data
// exactly real and removes order dependence where convergence is only
// conditional. N = 0 returns 0. The imaginary part is reported, not
// discarded.
std::complex<double> partial_sum(int m, const Rational& u_val, double x, long N,
                                 const FrobeniusNumberTable& table);

struct FourierVerifyParams {
    std::vector<int> m_values;
    std::vector<Rational> u_samples;
    std::vector<Rational> x_samples;   // strictly interior
    std::vector<long> n_schedule;      // increasing truncation sizes
    double tol_exact_numeric = 1e-10;  // coeff-consistency
    double tol_convergence = 5e-2;     // theorem1-convergence at the last N
    double tol_corollary1 = 1e-8;      // u = -1 case at the first N
};

// Valid ids: "coeff-consistency", "theorem1-convergence", "corollary1",
// "corollary3-x1". Throws std::invalid_argument on an unknown id or an
// invalid parameter grid.
std::vector<VerificationReport> verify_fourier(std::string_view id, const FourierVerifyParams& params,
                                               const FrobeniusNumberTable& table);

const std::vector<std::string>& fourier_check_ids();

}  // namespace feuler
