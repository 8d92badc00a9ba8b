// Acceptance suite: one determinate pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "feuler/fourier.hpp"
#include "feuler/frobenius.hpp"
#include "feuler/harness.hpp"
#include "feuler/lerch.hpp"
#include "feuler/stirling.hpp"

using namespace feuler;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, bool ok, const std::string& what, double seconds) {
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", idx, what.c_str(), seconds);
    if (!ok) ++failures;
}

template <typename F>
void criterion(int idx, const std::string& what, F&& body) {
    const auto start = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(idx, ok, what + (detail.empty() ? "" : " [" + detail + "]"), secs);
}

UPolynomial up(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UPolynomial(std::move(c));
}

bool all_ok(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs)
        if (!r.ok) return false;
    return !rs.empty();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    criterion(1, "exact table fidelity for the displayed H_0, H_1, H_2 in under 1 s", [](std::string& d) {
        const auto start = Clock::now();
        const FrobeniusNumberTable t(2);
        const bool values = t.at(0) == URational(1) &&
                            t.at(1) == URational(up({-1}), up({1, -1})) &&
                            t.at(2) == URational(up({1, 1}), up({1, -1}).pow(2));
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs >= 1.0) d = "too slow";
        return values && secs < 1.0;
    });

    criterion(2, "symbolic identity suite exact (eq26/lemma1/appell to 30, oracle to 15, eq10 to 15) in under 30 s",
              [](std::string& d) {
                  const auto start = Clock::now();
                  const bool ok = all_ok(check_frobenius("recurrence-eq26", 30)) &&
                                  all_ok(check_frobenius("lemma1", 30)) &&
                                  all_ok(check_frobenius("appell-derivative", 30)) &&
                                  all_ok(check_frobenius("oracle-match", 15)) &&
                                  all_ok(verify_stirling("eq10-factorization", 15));
                  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
                  std::ostringstream o;
                  o << "runtime " << secs << "s";
                  d = o.str();
                  return ok && secs < 30.0;
              });

    criterion(3, "Euler specialization agrees with the 2/(e^t+1) series oracle to n = 20", [](std::string& d) {
        const auto oracle = euler_numbers_oracle(20);
        if (oracle[0] != Rational(1) || oracle[1] != Rational(-1, 2) || oracle[2] != Rational(0) ||
            oracle[3] != Rational(1, 4)) {
            d = "oracle start values wrong";
            return false;
        }
        const FrobeniusNumberTable t(20);
        const auto polys = euler_polynomials_oracle(20);
        for (int n = 0; n <= 20; ++n) {
            if (t.at(n).eval(Rational(-1)) != oracle[static_cast<size_t>(n)]) return false;
            auto coeffs = fe_polynomial(n, t).coeffs_at_u(Rational(-1));
            coeffs.resize(static_cast<size_t>(n) + 1, Rational(0));
            if (coeffs != polys[static_cast<size_t>(n)]) return false;
        }
        return true;
    });

    criterion(4, "Fourier coefficient oracle: max |exact - quadrature| < 1e-10 on the full grid in under 60 s",
              [](std::string& d) {
                  const auto start = Clock::now();
                  const FrobeniusNumberTable t(8);
                  const std::vector<Rational> us = {Rational(-3), Rational(-1), Rational(1, 2),
                                                    Rational(2), Rational(1, 3)};
                  double worst = 0.0;
                  for (int m = 0; m <= 6; ++m) {
                      const WPolynomial a = fourier_coeff_exact(m, t);
                      for (const auto& u : us)
                          for (long n = -6; n < 6; ++n)
                              worst = std::max(worst, std::abs(fourier_coeff_eval(a, n, u) -
                                                               fourier_coeff_quadrature(m, n, u, 1e-11, t)));
                  }
                  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
                  std::ostringstream o;
                  o << "max deviation " << worst << ", runtime " << secs << "s";
                  d = o.str();
                  return worst < 1e-10 && secs < 60.0;
              });

    criterion(5, "Corollary 1 convergence: |partial_sum(N=64) - E_3(x)| < 1e-8 at x = 1/3, 1/2", [](std::string& d) {
        const FrobeniusNumberTable t(8);
        const XPolynomial e3 = fe_polynomial(3, t);
        const Rational e3_third = fe_eval(e3, Rational(-1), Rational(1, 3));
        if (e3_third != Rational(13, 108)) {
            d = "E_3(1/3) != 13/108";
            return false;
        }
        double worst = 0.0;
        for (const Rational& x : {Rational(1, 3), Rational(1, 2)}) {
            const auto s = partial_sum(3, Rational(-1), x.to_double(), 64, t);
            const auto exact = fe_eval(e3, Rational(-1), x).to_double();
            worst = std::max(worst, std::abs(s - std::complex<double>(exact, 0.0)));
        }
        std::ostringstream o;
        o << "max error " << worst;
        d = o.str();
        return worst < 1e-8;
    });

    criterion(6, "Theorem 1 convergence at u = 2, m in {3,5}, x in {1/4,1/3,1/2}", [](std::string& d) {
        const FrobeniusNumberTable t(8);
        double worst_final = 0.0, worst_imag = 0.0;
        bool decreasing = true;
        for (int m : {3, 5}) {
            const XPolynomial p = fe_polynomial(m, t);
            for (const Rational& x : {Rational(1, 4), Rational(1, 3), Rational(1, 2)}) {
                const double target = fe_eval(p, Rational(2), x).to_double();
                const auto coarse = partial_sum(m, Rational(2), x.to_double(), 64, t);
                const auto fine = partial_sum(m, Rational(2), x.to_double(), 8192, t);
                const double e64 = std::abs(coarse.real() - target);
                const double e8192 = std::abs(fine.real() - target);
                decreasing = decreasing && e8192 < e64;
                worst_final = std::max(worst_final, e8192);
                worst_imag = std::max({worst_imag, std::abs(coarse.imag()), std::abs(fine.imag())});
            }
        }
        std::ostringstream o;
        o << "max error at N=8192: " << worst_final << ", max |imag|: " << worst_imag;
        d = o.str();
        return decreasing && worst_final < 5e-2 && worst_imag < 1e-10;
    });

    criterion(7, "Lerch engine: shift identity < 1e-11 on the 50-point grid; Phi(1/2,1,1) and Phi(1,2,1)",
              [](std::string& d) {
                  LerchVerifyParams p;
                  p.tol = 1e-11;
                  const FrobeniusNumberTable t(8);
                  const auto rs = verify_lerch("shift-identity", p, t);
                  if (rs.size() != 1 || !rs[0].ok) {
                      d = "shift identity residual " + rs[0].abs_residual;
                      return false;
                  }
                  const auto log2 = lerch_phi({0.5, 0.0}, 1.0, 1.0, 1e-10);
                  const auto basel = lerch_phi({1.0, 0.0}, 2.0, 1.0, 1e-7);
                  const double err1 = std::abs(log2.value.real() - 2.0 * std::log(2.0));
                  const double err2 = std::abs(basel.value.real() - M_PI * M_PI / 6.0);
                  std::ostringstream o;
                  o << "grid residual " << rs[0].abs_residual << ", |Phi(1/2,1,1)-2ln2| = " << err1
                    << ", |Phi(1,2,1)-pi^2/6| = " << err2;
                  d = o.str();
                  return err1 < 1e-9 && err2 < 1e-6;
              });

    criterion(8, "Stirling triangle equals set-partition enumeration to m = 8 with Bell row sums",
              [](std::string&) {
                  const Stirling2Table t(8);
                  for (int m = 0; m <= 8; ++m) {
                      mpz_class row = 0;
                      for (int n = 0; n <= m; ++n) {
                          if (t.at(m, n) != stirling2_bruteforce(m, n)) return false;
                          row += t.at(m, n);
                      }
                      if (row != bell_bruteforce(m)) return false;
                  }
                  return true;
              });

    criterion(9, "literature-claim verdicts determinate; byte-identical consecutive runs; default exit 0",
              [](std::string& d) {
                  // exact residuals at m = 1
                  const auto t3 = verify_stirling("theorem3", 2);
                  const URational expected_t3 =
                      URational(up({0, 1}), up({1, -1}).pow(2)) - URational(up({0, 1}), up({1}));
                  if (t3.empty() || t3[0].abs_residual != expected_t3.str()) {
                      d = "theorem3 m=1 residual mismatch";
                      return false;
                  }
                  const auto c4 = verify_stirling("corollary4", 2);
                  if (c4.empty() || c4[0].abs_residual != "3/2") {
                      d = "corollary4 m=1 residual mismatch";
                      return false;
                  }

                  // eq14 at (m=2, x=0): left -1/4, right -1/8
                  const FrobeniusNumberTable table(8);
                  LerchVerifyParams lp;
                  lp.m_values = {2};
                  lp.x_samples = {Rational(1, 3)};
                  lp.bilateral_N = 32768;
                  const auto eq14 = verify_lerch("eq14", lp, table);
                  const double left = std::stod(eq14[0].lhs_rendered);
                  const double right = std::stod(eq14[0].rhs_rendered);
                  if (std::abs(left + 0.25) > 1e-4 || std::abs(right + 0.125) > 1e-6) {
                      d = "eq14 values off: " + eq14[0].lhs_rendered + " vs " + eq14[0].rhs_rendered;
                      return false;
                  }

                  // corollary3-x1 reports a stabilized limit and both residuals
                  FourierVerifyParams fp;
                  fp.m_values = {4};
                  fp.u_samples = {Rational(2)};
                  fp.x_samples = {Rational(1, 2)};
                  fp.n_schedule = {64, 256, 1024, 8192};
                  const auto c3 = verify_fourier("corollary3-x1", fp, table);
                  if (c3.size() != 1 || c3[0].notes.find("residual against the displayed right side") ==
                                            std::string::npos) {
                      d = "corollary3-x1 missing residuals";
                      return false;
                  }

                  // two consecutive full CLI runs are byte-identical with exit 0
                  const auto tmp = std::filesystem::temp_directory_path();
                  const auto out1 = tmp / "feuler_accept_run1.json";
                  const auto out2 = tmp / "feuler_accept_run2.json";
                  const std::string cli = FEULER_CLI_BIN;
                  for (const auto& out : {out1, out2}) {
                      const std::string cmd =
                          "\"" + cli + "\" verify --suite all --format json --out \"" + out.string() + "\"";
                      const int status = std::system(cmd.c_str());
                      if (status == -1 || WEXITSTATUS(status) != 0) {
                          d = "verify exit status nonzero";
                          return false;
                      }
                  }
                  const std::string run1 = read_file(out1);
                  const std::string run2 = read_file(out2);
                  std::filesystem::remove(out1);
                  std::filesystem::remove(out2);
                  if (run1.empty() || run1 != run2) {
                      d = "consecutive runs differ";
                      return false;
                  }

                  // all pass/fail-class checks pass in the default run
                  const auto reports = run_suite(SuiteConfig{});
                  for (const auto& r : reports)
                      if (r.verdict == Verdict::fail) {
                          d = "pass/fail-class failure in " + r.identity_id;
                          return false;
                      }
                  return suite_exit_status(reports, false) == 0;
              });

    if (failures == 0) std::printf("all acceptance criteria satisfied\n");
    return failures == 0 ? 0 : 1;
}
