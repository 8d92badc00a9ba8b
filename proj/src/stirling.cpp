#include "feuler/stirling.hpp"

#include <algorithm>

#include "feuler/frobenius.hpp"
#include "feuler/power_series.hpp"

namespace feuler {

Stirling2Table::Stirling2Table(int m_max) {
    if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
    rows_.reserve(static_cast<size_t>(m_max) + 1);
    rows_.push_back({mpz_class(1)});
    for (int m = 1; m <= m_max; ++m) {
        std::vector<mpz_class> row(static_cast<size_t>(m) + 1, 0);
        const auto& prev = rows_.back();
        for (int n = 1; n <= m; ++n) {
            mpz_class v = (n < m) ? mpz_class(n * prev[static_cast<size_t>(n)]) : mpz_class(0);
            if (n - 1 < m) v += prev[static_cast<size_t>(n - 1)];
            row[static_cast<size_t>(n)] = v;
        }
        rows_.push_back(std::move(row));
    }
}

const mpz_class& Stirling2Table::at(int m, int n) const {
    if (m < 0 || m > m_max() || n < 0 || n > m) throw std::out_of_range("Stirling triangle index");
    return rows_[static_cast<size_t>(m)][static_cast<size_t>(n)];
}

namespace {

// Depth-first walk over restricted-growth strings a[0..m-1] with
// a[i] <= 1 + max(a[0..i-1]); the string's maximum + 1 is the block count.
void rgs_count(int pos, int m, int prefix_max, int want_blocks, mpz_class& count) {
    if (pos == m) {
        if (want_blocks < 0 || prefix_max + 1 == want_blocks) ++count;
        return;
    }
    const int remaining = m - pos;
    for (int v = 0; v <= prefix_max + 1; ++v) {
        const int new_max = std::max(prefix_max, v);
        if (want_blocks >= 0) {
            if (new_max + 1 > want_blocks) break;
            if (new_max + 1 + remaining - 1 < want_blocks) continue;
        }
        rgs_count(pos + 1, m, new_max, want_blocks, count);
    }
}

}  // namespace

mpz_class stirling2_bruteforce(int m, int n) {
    if (m < 0 || n < 0 || n > m || m > 12)
        throw std::out_of_range("enumeration bound exceeded (requires 0 <= n <= m <= 12)");
    if (m == 0) return 1;  // the empty partition
    mpz_class count = 0;
    rgs_count(1, m, 0, n, count);  // a[0] = 0 always
    return count;
}

mpz_class bell_bruteforce(int m) {
    if (m < 0 || m > 12) throw std::out_of_range("enumeration bound exceeded (requires 0 <= m <= 12)");
    if (m == 0) return 1;
    mpz_class count = 0;
    rgs_count(1, m, 0, -1, count);
    return count;
}

URational substitute_inverse_u(const URational& r) {
    if (r.is_zero()) return r;
    const int d = std::max(r.num().degree(), r.den().degree());
    auto reverse_to = [d](const UPolynomial& p) {
        std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
        for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] = p.coeff(d - i);
        return UPolynomial(std::move(c));
    };
    return URational(reverse_to(r.num()), reverse_to(r.den()));
}

namespace {

// 1 - u e^{-t} as a series over URational: constant 1 - u, then
// t^k coefficient -u (-1)^k / k!.
PowerSeries<URational> one_minus_u_exp_neg_t(int order) {
    PowerSeries<URational> s(order);
    const URational u = URational::u();
    s.set_coeff(0, URational(1) - u);
    Rational inv_fact(1);
    for (int k = 1; k <= order; ++k) {
        inv_fact = inv_fact / Rational(k);
        Rational c = inv_fact;
        if (k % 2 == 0) c = -c;  // -(-1)^k / k!
        s.set_coeff(k, URational(c) * u);
    }
    return s;
}

VerificationReport exact_report(std::string id, std::map<std::string, std::string> params,
                                std::string lhs, std::string rhs, bool zero, std::string residual) {
    VerificationReport r;
    r.identity_id = std::move(id);
    r.parameters = std::move(params);
    r.lhs_rendered = std::move(lhs);
    r.rhs_rendered = std::move(rhs);
    r.abs_residual = zero ? "0 (exact)" : std::move(residual);
    r.verdict = zero ? Verdict::pass : Verdict::fail;
    r.tolerance = "exact";
    r.ok = zero;
    return r;
}

std::vector<VerificationReport> check_eq10(int m_max) {
    const FrobeniusNumberTable table(m_max);
    const auto rec = one_minus_u_exp_neg_t(m_max).reciprocal();
    const URational inv_one_minus_u = (URational(1) - URational::u()).inverse();
    std::vector<VerificationReport> out;
    Rational fact(1);
    for (int m = 0; m <= m_max; ++m) {
        if (m > 0) fact = fact * Rational(m);
        const URational lhs = rec.coeff(m) * URational(fact);
        URational rhs = substitute_inverse_u(table.at(m)) * inv_one_minus_u;
        if (m % 2 == 1) rhs = -rhs;
        const URational diff = lhs - rhs;
        out.push_back(exact_report("eq10", {{"m", std::to_string(m)}}, lhs.str(), rhs.str(),
                                   diff.is_zero(), diff.str()));
    }
    return out;
}

std::vector<VerificationReport> check_theorem3(int m_max) {
    const FrobeniusNumberTable table(m_max);
    const Stirling2Table s2(m_max);
    const URational u = URational::u();
    const URational inv_one_minus_u = (URational(1) - u).inverse();
    std::vector<VerificationReport> out;
    for (int m = 1; m <= m_max; ++m) {
        const URational lhs = substitute_inverse_u(table.at(m)) * inv_one_minus_u;
        URational rhs(0);
        Rational fact(1);
        URational upow(1);
        for (int n = 0; n <= m; ++n) {
            if (n > 0) {
                fact = fact * Rational(n);
                upow = upow * u;
            }
            rhs += URational(fact * Rational(s2.at(m, n))) * upow;
        }
        const URational diff = lhs - rhs;
        out.push_back(exact_report("theorem3", {{"m", std::to_string(m)}}, lhs.str(), rhs.str(),
                                   diff.is_zero(), diff.str()));
    }
    return out;
}

std::vector<VerificationReport> check_corollary4(int m_max) {
    const Stirling2Table s2(m_max);
    const auto euler = euler_numbers_oracle(m_max);
    std::vector<VerificationReport> out;
    for (int m = 1; m <= m_max; ++m) {
        const Rational lhs = euler[static_cast<size_t>(m)];
        Rational rhs(0);
        Rational fact(1);
        for (int n = 0; n <= m; ++n) {
            if (n > 0) fact = fact * Rational(n);
            Rational term = fact * Rational(s2.at(m, n));
            if (n % 2 == 1) term = -term;
            rhs += term;
        }
        rhs = rhs * Rational(2);
        const Rational diff = abs(lhs - rhs);
        out.push_back(exact_report("corollary4", {{"m", std::to_string(m)}}, lhs.str(), rhs.str(),
                                   diff.is_zero(), diff.str()));
    }
    return out;
}

std::vector<VerificationReport> check_triangle(int m_max) {
    const int depth = std::min(m_max, 8);
    const Stirling2Table s2(depth);
    std::vector<VerificationReport> out;
    for (int m = 0; m <= depth; ++m) {
        mpz_class row_sum = 0;
        mpz_class mismatch = 0;
        for (int n = 0; n <= m; ++n) {
            const mpz_class brute = stirling2_bruteforce(m, n);
            if (brute != s2.at(m, n)) ++mismatch;
            row_sum += s2.at(m, n);
        }
        const mpz_class bell = bell_bruteforce(m);
        const bool ok = (mismatch == 0) && (row_sum == bell);
        auto r = exact_report("stirling-triangle", {{"m", std::to_string(m)}},
                              "row sum " + row_sum.get_str(), "Bell " + bell.get_str(), ok,
                              mismatch.get_str() + " entry mismatches");
        r.notes = "triangle row checked entry-by-entry against set-partition enumeration";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> check_cross_identity(int m_max) {
    const FrobeniusNumberTable table(m_max);
    const Stirling2Table s2(m_max);
    const auto rec = one_minus_u_exp_neg_t(m_max).reciprocal();
    const URational u = URational::u();
    const URational inv_u_minus_1 = (u - URational(1)).inverse();
    const URational inv_one_minus_u = (URational(1) - u).inverse();
    std::vector<VerificationReport> out;
    Rational fact_m(1);
    for (int m = 0; m <= m_max; ++m) {
        if (m > 0) fact_m = fact_m * Rational(m);

        // Classical expansion H_m(u) = sum_k k! S2(m,k) (u-1)^{-k}.
        URational rhs(0);
        Rational fact(1);
        URational invpow(1);
        for (int k = 0; k <= m; ++k) {
            if (k > 0) {
                fact = fact * Rational(k);
                invpow = invpow * inv_u_minus_1;
            }
            rhs += URational(fact * Rational(s2.at(m, k))) * invpow;
        }
        const URational diff1 = table.at(m) - rhs;

        // Same content through the series route: the t^m/m! coefficient of
        // reciprocal(1 - u e^{-t}) equals (-1)^m sum_k k! S2(m,k) u^k/(1-u)^{k+1}.
        const URational series_coeff = rec.coeff(m) * URational(fact_m);
        URational expansion(0);
        fact = Rational(1);
        URational upow(1);
        URational invq = inv_one_minus_u;
        for (int k = 0; k <= m; ++k) {
            if (k > 0) {
                fact = fact * Rational(k);
                upow = upow * u;
                invq = invq * inv_one_minus_u;
            }
            expansion += URational(fact * Rational(s2.at(m, k))) * upow * invq;
        }
        if (m % 2 == 1) expansion = -expansion;
        const URational diff2 = series_coeff - expansion;

        const bool ok = diff1.is_zero() && diff2.is_zero();
        auto r = exact_report("stirling-cross", {{"m", std::to_string(m)}}, table.at(m).str(), rhs.str(),
                              ok, (diff1 + diff2).str());
        r.notes = "also checked via the series reciprocal of 1 - u e^{-t}";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

const std::vector<std::string>& stirling_check_ids() {
    static const std::vector<std::string> ids = {"eq10-factorization", "theorem3", "corollary4",
                                                 "triangle-oracle", "cross-identity"};
    return ids;
}

std::vector<VerificationReport> verify_stirling(std::string_view id, int m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    if (id == "eq10-factorization") return check_eq10(m_max);
    if (id == "theorem3") return check_theorem3(m_max);
    if (id == "corollary4") return check_corollary4(m_max);
    if (id == "triangle-oracle") return check_triangle(m_max);
    if (id == "cross-identity") return check_cross_identity(m_max);
    throw std::invalid_argument("unknown id: " + std::string(id));
}

}  // namespace feuler
