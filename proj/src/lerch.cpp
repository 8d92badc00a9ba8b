#include "feuler/lerch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phase.hpp"

namespace feuler {

namespace {

constexpr double kCircleSnap = 1e-12;
constexpr long kMaxTerms = 200'000'000;

bool is_nonpositive_integer(double a) { return a <= 0.0 && std::abs(a - std::round(a)) < 1e-12; }

bool is_integer(double s) { return std::abs(s - std::round(s)) < 1e-12; }

// (b)^{-s} for real b != 0. Negative bases: exact signed power for integer s,
// principal branch e^{-s(log|b| + i pi)} otherwise.
std::complex<double> base_power(double b, double s, bool& used_principal_branch) {
    if (b > 0.0) return {std::pow(b, -s), 0.0};
    if (is_integer(s)) {
        const long si = static_cast<long>(std::llround(s));
        const double mag = std::pow(-b, -s);
        return {(si % 2 != 0) ? -mag : mag, 0.0};
    }
    used_principal_branch = true;
    const double mag = std::pow(-b, -s);
    return mag * std::exp(std::complex<double>(0.0, -s * M_PI));
}

}  // namespace

LerchResult lerch_phi(std::complex<double> z, double s, double a, double tol) {
    if (tol < 1e-13) throw std::invalid_argument("tolerance below the 1e-13 floor");
    if (is_nonpositive_integer(a)) throw std::domain_error("pole in a");
    const double q = std::abs(z);
    const bool on_circle = std::abs(q - 1.0) <= kCircleSnap;
    if (q > 1.0 + kCircleSnap || (on_circle && !(s > 1.0)))
        throw std::domain_error("series domain violated");

    LerchResult res;
    bool used_branch = false;
    bool used_integer_power = false;
    std::complex<double> zp(1.0, 0.0);
    std::complex<double> sum(0.0, 0.0);
    for (long n = 0;; ++n) {
        if (n > kMaxTerms)
            throw std::runtime_error("term budget exhausted before reaching the requested tolerance");
        const double b = static_cast<double>(n) + a;
        if (b < 0.0 && is_integer(s)) used_integer_power = true;
        const std::complex<double> term = zp * base_power(b, s, used_branch);
        sum += term;
        res.terms_used = n + 1;

        if (b > 0.0) {
            if (on_circle) {
                // Terms k >= n+1 are bounded by the integral comparison from
                // the current index: sum (k+a)^{-s} <= (n+a)^{1-s}/(s-1).
                const double bound = std::pow(b, 1.0 - s) / (s - 1.0);
                if (bound < tol) {
                    res.tail_bound = bound;
                    break;
                }
            } else {
                // Geometric ratio bound; for s < 0 the term ratio exceeds q
                // by the base-growth factor, handled explicitly.
                double rho = q;
                if (s < 0.0) rho *= std::pow((b + 1.0) / b, -s);
                if (rho < 1.0) {
                    const double bound = std::abs(term) * rho / (1.0 - rho);
                    if (bound < tol) {
                        res.tail_bound = bound;
                        break;
                    }
                }
            }
        }
        zp *= z;
        if (on_circle && (n & 0xfffL) == 0xfffL) zp /= std::abs(zp);  // modulus drift control
    }
    res.value = sum;
    if (!std::isfinite(res.value.real()) || !std::isfinite(res.value.imag()))
        throw std::domain_error("non-finite series value");
    std::ostringstream notes;
    if (used_integer_power) notes << "negative bases handled as exact signed integer powers";
    if (used_branch) {
        if (used_integer_power) notes << "; ";
        notes << "negative bases on the principal branch e^{-s(log|n+a| + i pi)}";
    }
    res.notes = notes.str();
    return res;
}

LerchResult lerch_phi_boundary(std::complex<double> z, int s, double a, double tol) {
    if (tol < 1e-13) throw std::invalid_argument("tolerance below the 1e-13 floor");
    if (is_nonpositive_integer(a)) throw std::domain_error("pole in a");
    if (s < 1) throw std::domain_error("series domain violated");
    const std::complex<double> om = 1.0 - z;
    if (std::abs(std::abs(z) - 1.0) > kCircleSnap || std::abs(om) < 1e-9)
        throw std::domain_error("series domain violated");

    bool used_branch = false;
    bool used_integer_power = false;
    long N = 64;
    for (;;) {
        // Certified remainder of the three-term Abel tail below.
        const double bound = 2.0 / ((N + a) * (N + a + 1.0) * (N + a + 2.0) * std::pow(std::abs(om), 3));
        if (bound < tol || N >= (1L << 22)) {
            std::complex<double> sum(0.0, 0.0);
            std::complex<double> zp(1.0, 0.0);
            for (long n = 0; n < N; ++n) {
                const double b = static_cast<double>(n) + a;
                if (b < 0.0) used_integer_power = true;
                sum += zp * base_power(b, static_cast<double>(s), used_branch);
                zp *= z;
                if ((n & 0xfffL) == 0xfffL) zp /= std::abs(zp);
            }
            // Abel-transformed tail: sum_{n>=N} z^n g(n-N) with g(k) = (N+k+a)^{-s};
            // two explicit difference terms, third difference bounds the rest.
            auto g = [&](int k) { return std::pow(static_cast<double>(N + k) + a, -static_cast<double>(s)); };
            const double g0 = g(0), g1 = g(1), g2 = g(2);
            const double dg0 = g1 - g0;
            const double d2g0 = (g2 - g1) - dg0;
            sum += zp * (g0 / om + z * dg0 / (om * om) + z * z * d2g0 / (om * om * om));

            LerchResult res;
            res.value = sum;
            res.tail_bound = bound;
            res.terms_used = N;
            std::ostringstream notes;
            notes << "unit-circle summation with Abel-transformed tail";
            if (used_integer_power) notes << "; negative bases as exact signed integer powers";
            res.notes = notes.str();
            if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
                throw std::domain_error("non-finite series value");
            return res;
        }
        N *= 4;
    }
}

double bilateral_tail_bound(int m, long N) {
    if (m < 2 || N < 1) throw std::invalid_argument("tail bound requires m >= 2, N >= 1");
    return std::pow(static_cast<double>(2 * N - 1) * M_PI, 1 - m) / static_cast<double>(m - 1);
}

std::complex<double> bilateral_sum(int m, double x, long N) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    if (m == 1 && std::abs(x - std::round(x)) < 1e-12)
        throw std::domain_error("conditionally divergent point");

    // The index -n-1 term is the exact conjugate of the index n term for
    // real x (((-(2n+1)) pi i)^m = conj(((2n+1) pi i)^m)); accumulating
    // conjugate pairs keeps the sum exactly real for real data.
    std::complex<double> total(0.0, 0.0);
    for (long n = 0; n < N; ++n) {
        const double y = static_cast<double>(2 * n + 1);
        const std::complex<double> inv_pos = 1.0 / (std::pow(y, m) * detail::pi_i_pow(m));
        const std::complex<double> pos = detail::unit_phase(y * x) * inv_pos;
        total += pos + std::conj(pos);
    }
    if (!std::isfinite(total.real()) || !std::isfinite(total.imag()))
        throw std::domain_error("non-finite bilateral sum");
    return total;
}

namespace {

// -e^{pi i x}/(pi i)^s + (-1)^s e^{pi i x}/(2 pi i)^s + Phi(e^{-2 pi i x}, s, -1/2),
// the bracket shared by the literal theorem-2/corollary-2 displays. The
// Phi term is deliberately NOT scaled by e^{pi i x}/(2 pi i)^s: that is how
// the displays are printed.
std::complex<double> literal_bracket(int s, const Rational& x, double phi_tol) {
    const double xd = x.to_double();
    const std::complex<double> e = detail::unit_phase(xd);
    const std::complex<double> z = detail::unit_phase(-2.0 * xd);
    const std::complex<double> phi = lerch_phi_boundary(z, s, -0.5, phi_tol).value;
    const double sign = (s % 2 == 0) ? 1.0 : -1.0;
    return -e / detail::pi_i_pow(s) + sign * e / (std::pow(2.0, s) * detail::pi_i_pow(s)) + phi;
}

VerificationReport numeric_report(std::string id, std::map<std::string, std::string> params,
                                  std::complex<double> lhs, std::complex<double> rhs, double tol) {
    VerificationReport r;
    r.identity_id = std::move(id);
    r.parameters = std::move(params);
    r.lhs_rendered = format_complex(lhs);
    r.rhs_rendered = format_complex(rhs);
    const double residual = std::abs(lhs - rhs);
    r.abs_residual = format_real(residual);
    r.tolerance = format_real(tol);
    r.ok = residual < tol;
    r.verdict = r.ok ? Verdict::pass : Verdict::fail;
    return r;
}

std::vector<VerificationReport> check_shift_identity(const LerchVerifyParams& p) {
    // Deterministic 50-point grid; the generator mapping is fixed so byte
    // identity of reports holds across runs and platforms.
    std::vector<VerificationReport> out;
    uint64_t state = 0x243f6a8885a308d3ULL;  // fixed seed
    auto next_unit = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(state >> 11) * 0x1p-53;
    };
    double worst = 0.0;
    std::string worst_at;
    for (int i = 0; i < 50; ++i) {
        const double r = 0.7 * next_unit();
        const double phi = 2.0 * M_PI * next_unit();
        const double s = 1.5 + 4.5 * next_unit();
        const double a = 0.3 + 2.7 * next_unit();
        const std::complex<double> z = std::polar(r, phi);
        const auto lhs = lerch_phi(z, s, a, 1e-13);
        const auto rhs = lerch_phi(z, s, a + 1.0, 1e-13);
        const double residual = std::abs(lhs.value - (z * rhs.value + std::pow(a, -s)));
        if (residual > worst) {
            worst = residual;
            std::ostringstream loc;
            loc << "z=" << format_complex(z) << ", s=" << format_real(s) << ", a=" << format_real(a);
            worst_at = loc.str();
        }
    }
    VerificationReport r;
    r.identity_id = "shift-identity";
    r.parameters = {{"grid", "50 fixed pseudo-random points, |z| <= 0.7, s in [1.5,6], a in [0.3,3]"}};
    r.lhs_rendered = "Phi(z,s,a)";
    r.rhs_rendered = "z*Phi(z,s,a+1) + a^{-s}";
    r.abs_residual = format_real(worst);
    r.tolerance = format_real(p.tol);
    r.notes = "worst point: " + worst_at;
    r.ok = worst < p.tol;
    r.verdict = r.ok ? Verdict::pass : Verdict::fail;
    out.push_back(std::move(r));
    return out;
}

std::vector<VerificationReport> check_eq14(const LerchVerifyParams& p) {
    std::vector<VerificationReport> out;
    std::vector<Rational> xs = {Rational(0)};
    xs.insert(xs.end(), p.x_samples.begin(), p.x_samples.end());
    for (int m : p.m_values) {
        if (m < 2) continue;  // Phi(e^{-2 pi i x}, 1, -1/2) sits outside the series domain
        for (const auto& x : xs) {
            const double xd = x.to_double();
            const std::complex<double> left = bilateral_sum(m, xd, p.bilateral_N);
            const std::complex<double> e = detail::unit_phase(xd);
            const std::complex<double> z =
                (x == Rational(0)) ? std::complex<double>(1.0, 0.0) : detail::unit_phase(-2.0 * xd);
            const double phi_tol = (m == 2) ? 5e-7 : 1e-9;
            const auto phi = lerch_phi(z, static_cast<double>(m), -0.5, phi_tol);
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            const std::complex<double> right =
                -e / detail::pi_i_pow(m) + sign * e / (std::pow(2.0, m) * detail::pi_i_pow(m)) * phi.value;
            auto r = numeric_report("eq14", {{"m", std::to_string(m)}, {"x", x.str()},
                                             {"N", std::to_string(p.bilateral_N)}},
                                    left, right, p.tol);
            r.notes = "right side reproduces the negative-frequency half of the bilateral sum; "
                      "Phi tail bound " + format_real(phi.tail_bound);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<VerificationReport> check_theorem2(const LerchVerifyParams& p,
                                               const FrobeniusNumberTable& table) {
    for (int m : p.m_values)
        if (m < 5) throw std::invalid_argument("theorem2 requires m >= 5");
    std::vector<VerificationReport> out;
    for (int m : p.m_values) {
        const XPolynomial poly = fe_polynomial(m, table);
        const Rational m_fact = Rational::factorial(static_cast<unsigned long>(m));
        for (const auto& u : p.u_samples) {
            const Rational ratio = (u + Rational(1)) / (u - Rational(1));  // (u+1)/(u-1)
            for (const auto& x : p.x_samples) {
                const double lhs = fe_eval(poly, u, x).to_double();
                std::complex<double> rhs = m_fact.to_double() * ratio.to_double() * literal_bracket(m, x, 1e-9);
                rhs += 2.0 * m_fact.to_double() * literal_bracket(m + 1, x, 1e-9);
                rhs += 0.5 * ratio.to_double() * ratio.to_double() * literal_bracket(m - 1, x, 1e-9);
                Rational deriv_factor(1);  // m!/(m-k)!
                for (int k = 0; k <= m - 4; ++k) {
                    if (k > 0) deriv_factor = deriv_factor * Rational(m - k + 1);
                    const Rational dk = deriv_factor * table.at(m - k).eval(u);  // d^k/dx^k H_m(x,u)|_{x=0}
                    rhs += (u + Rational(1)).to_double() * dk.to_double() * literal_bracket(k + 1, x, 1e-9);
                }
                auto r = numeric_report("theorem2",
                                        {{"m", std::to_string(m)}, {"u", u.str()}, {"x", x.str()}},
                                        std::complex<double>(lhs, 0.0), rhs, p.tol);
                r.lhs_rendered = "H_m(x,u) = " + format_real(lhs);
                r.notes = "literal display; Phi terms via unit-circle summation, including the "
                          "conditionally convergent order-1 term (k = 0)";
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::vector<VerificationReport> check_corollary2(const LerchVerifyParams& p,
                                                 const FrobeniusNumberTable& table) {
    std::vector<VerificationReport> out;
    const Rational minus_one(-1);
    for (int m : p.m_values) {
        if (m < 1) continue;
        const XPolynomial poly = fe_polynomial(m, table);
        const double two_m_fact = 2.0 * Rational::factorial(static_cast<unsigned long>(m)).to_double();
        for (const auto& x : p.x_samples) {
            const Rational exact = fe_eval(poly, minus_one, x);
            const std::complex<double> rhs = two_m_fact * literal_bracket(m + 1, x, 1e-9);
            auto r = numeric_report("corollary2", {{"m", std::to_string(m)}, {"x", x.str()}},
                                    std::complex<double>(exact.to_double(), 0.0), rhs, p.tol);
            r.lhs_rendered = "E_" + std::to_string(m) + "(" + x.str() + ") = " + exact.str();
            r.notes = "literal display; the Phi term is printed outside the e^{pi i x}/(2 pi i)^{m+1} "
                      "prefactor";
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& lerch_check_ids() {
    static const std::vector<std::string> ids = {"eq14", "theorem2", "corollary2", "shift-identity"};
    return ids;
}

std::vector<VerificationReport> verify_lerch(std::string_view id, const LerchVerifyParams& params,
                                             const FrobeniusNumberTable& table) {
    for (const auto& x : params.x_samples)
        if (x.is_integer()) throw std::invalid_argument("x samples must be non-integer");
    if (id == "shift-identity") return check_shift_identity(params);
    if (id == "eq14") return check_eq14(params);
    if (id == "theorem2") return check_theorem2(params, table);
    if (id == "corollary2") return check_corollary2(params, table);
    throw std::invalid_argument("unknown id: " + std::string(id));
}

}  // namespace feuler
