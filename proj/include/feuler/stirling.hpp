#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "feuler/report.hpp"
#include "feuler/urational.hpp"

namespace feuler {

// Stirling numbers of the second kind S2(m, n), full triangle up to m_max,
// built from S2(m, n) = n*S2(m-1, n) + S2(m-1, n-1).
class Stirling2Table {
public:
    explicit Stirling2Table(int m_max);

    int m_max() const { return static_cast<int>(rows_.size()) - 1; }

    const mpz_class& at(int m, int n) const;

private:
    std::vector<std::vector<mpz_class>> rows_;
};

// Count of set partitions of {1..m} into exactly n nonempty blocks, by
// explicit enumeration of restricted-growth strings. Enumeration bound
// 0 <= n <= m <= 12; throws std::out_of_range beyond it.
mpz_class stirling2_bruteforce(int m, int n);

// Count of all set partitions of {1..m} (Bell number), same enumerator.
mpz_class bell_bruteforce(int m);

// r(1/u), renormalized to canonical form (numerator and denominator are both
// multiplied by u^D, D = max degree).
URational substitute_inverse_u(const URational& r);

// Identity checks tied to the Stirling expansion of 1/(1 - u e^{-t}).
// Valid ids:
//   "eq10-factorization" - t^m/m! coefficient of reciprocal(1 - u e^{-t})
//                          vs (-1)^m H_m(1/u)/(1-u); exact, expected to hold.
//   "theorem3"           - H_m(1/u)/(1-u) vs sum_n n! u^n S2(m,n); the exact
//                          residual is reported as computed.
//   "corollary4"         - E_m vs 2 sum_n n! (-1)^n S2(m,n); same contract.
//   "triangle-oracle"    - recurrence triangle vs enumeration + Bell row sums.
//   "cross-identity"     - H_m(u) vs sum_k k! S2(m,k) (u-1)^{-k}, plus the
//                          series-reciprocal route for the same coefficient.
// Verdicts are whatever the exact arithmetic yields.
std::vector<VerificationReport> verify_stirling(std::string_view id, int m_max);

const std::vector<std::string>& stirling_check_ids();

}  // namespace feuler
