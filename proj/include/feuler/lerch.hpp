#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "feuler/frobenius.hpp"
#include "feuler/report.hpp"

namespace feuler {

struct LerchResult {
    std::complex<double> value;
    double tail_bound = 0.0;  // certified bound on the truncation error
    long terms_used = 0;
    std::string notes;        // records branch decisions for negative bases
};

// Lerch transcendent Phi(z, s, a) = sum_{n>=0} z^n / (n+a)^s on its
// convergent-series domain: |z| < 1, or |z| = 1 with s > 1; a must not be a
// nonpositive integer. The partial sum is certified: for |z| = q < 1 the
// geometric-ratio tail bound is used, for |z| = 1 the integral comparison
// (N+a)^{1-s}/(s-1). Finitely many negative bases n + a < 0 use exact signed
// integer powers when s is an integer and the principal branch
// e^{-s(log|n+a| + i pi)} otherwise.
// Throws std::domain_error("series domain violated") outside the domain and
// std::domain_error("pole in a") for nonpositive-integer a.
LerchResult lerch_phi(std::complex<double> z, double s, double a, double tol);

// Boundary evaluator for |z| = 1, z != 1, integer s >= 1: direct summation
// accelerated with a three-term Abel-transformed tail and a certified
// remainder bound. This is the sanctioned way to reach the conditionally
// convergent s = 1 case that the plain series path excludes.
LerchResult lerch_phi_boundary(std::complex<double> z, int s, double a, double tol);

// Symmetric bilateral sum  sum_{n=-N}^{N-1} e^{(2n+1) pi i x} / ((2n+1) pi i)^m,
// accumulated as (n, -n-1) pairs in increasing n order. m = 1 requires a
// non-integer x (throws std::domain_error("conditionally divergent point")).
std::complex<double> bilateral_sum(int m, double x, long N);

// Analytic tail bound ((2N-1) pi)^{1-m} / (m-1) for |S(infinity) - S(N)|,
// valid for m >= 2.
double bilateral_tail_bound(int m, long N);

struct LerchVerifyParams {
    std::vector<int> m_values;
    std::vector<Rational> u_samples;
    std::vector<Rational> x_samples;  // non-integer
    long bilateral_N = 32768;
    double tol = 1e-6;
};

// Valid ids: "eq14", "theorem2", "corollary2", "shift-identity". The first
// three evaluate the literal displays and report residuals; shift-identity
// is an engine self-check and must pass. theorem2 requires every m >= 5.
std::vector<VerificationReport> verify_lerch(std::string_view id, const LerchVerifyParams& params,
                                             const FrobeniusNumberTable& table);

const std::vector<std::string>& lerch_check_ids();

}  // namespace feuler
