#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "feuler/stirling.hpp"

using namespace feuler;

namespace {

UPolynomial up(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UPolynomial(std::move(c));
}

const std::vector<VerificationReport>* find(const std::vector<VerificationReport>& rs,
                                            const std::string& m) {
    static std::vector<VerificationReport> one;
    one.clear();
    for (const auto& r : rs)
        if (r.parameters.count("m") && r.parameters.at("m") == m) one.push_back(r);
    return &one;
}

}  // namespace

TEST_CASE("triangle values") {
    const Stirling2Table t(12);
    for (int m = 0; m <= 12; ++m) CHECK(t.at(m, m) == 1);
    for (int m = 1; m <= 12; ++m) CHECK(t.at(m, 0) == 0);
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(3, 2) == 3);
    CHECK(t.at(4, 2) == 7);
    CHECK(t.at(10, 5) == 42525);
    CHECK_THROWS_AS(t.at(13, 1), std::out_of_range);
    CHECK_THROWS_AS(t.at(3, 4), std::out_of_range);
}

TEST_CASE("set-partition enumerator") {
    CHECK(stirling2_bruteforce(0, 0) == 1);
    CHECK(stirling2_bruteforce(5, 1) == 1);
    CHECK(stirling2_bruteforce(4, 2) == 7);
    CHECK(stirling2_bruteforce(3, 2) == 3);
    CHECK_THROWS_AS(stirling2_bruteforce(13, 2), std::out_of_range);
    CHECK_THROWS_AS(stirling2_bruteforce(4, 5), std::out_of_range);
}

TEST_CASE("triangle equals enumeration up to m = 8, row sums are Bell numbers") {
    const Stirling2Table t(8);
    for (int m = 0; m <= 8; ++m) {
        mpz_class row_sum = 0;
        for (int n = 0; n <= m; ++n) {
            CHECK(t.at(m, n) == stirling2_bruteforce(m, n));
            row_sum += t.at(m, n);
        }
        CHECK(row_sum == bell_bruteforce(m));
    }
    CHECK(bell_bruteforce(8) == 4140);
}

TEST_CASE("u -> 1/u substitution") {
    CHECK(substitute_inverse_u(URational(1)) == URational(1));

    // H_1 = -1/(1-u) maps to u/(1-u); checked structurally and by evaluation.
    const URational h1(up({-1}), up({1, -1}));
    const URational h1_inv = substitute_inverse_u(h1);
    CHECK(h1_inv == URational(up({0, 1}), up({1, -1})));
    CHECK(h1_inv.eval(Rational(2)) == Rational(-2));      // H_1(1/2)
    CHECK(h1_inv.eval(Rational(3)) == Rational(-3, 2));   // H_1(1/3)
    CHECK(h1.eval(Rational(1, 2)) == Rational(-2));
    CHECK(h1.eval(Rational(1, 3)) == Rational(-3, 2));

    // H_2 = (1+u)/(1-u)^2 maps to u(u+1)/(u-1)^2.
    const URational h2(up({1, 1}), up({1, -1}).pow(2));
    const URational h2_inv = substitute_inverse_u(h2);
    CHECK(h2_inv == URational(up({0, 1, 1}), up({-1, 1}).pow(2)));
    CHECK(h2_inv.eval(Rational(2)) == h2.eval(Rational(1, 2)));
    CHECK(h2_inv.eval(Rational(3)) == h2.eval(Rational(1, 3)));

    // involution
    CHECK(substitute_inverse_u(h2_inv) == h2);
}

TEST_CASE("eq10 factorization holds exactly") {
    const auto reports = verify_stirling("eq10-factorization", 15);
    CHECK(reports.size() == 16);
    for (const auto& r : reports) {
        CHECK(r.verdict == Verdict::pass);
        CHECK(r.abs_residual == "0 (exact)");
    }
}

TEST_CASE("theorem3 residuals are reported as computed") {
    const auto reports = verify_stirling("theorem3", 4);
    const auto& m1 = *find(reports, "1");
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].verdict == Verdict::fail);
    // residual u/(1-u)^2 - u in canonical form
    const URational expected =
        URational(up({0, 1}), up({1, -1}).pow(2)) - URational(up({0, 1}), up({1}));
    CHECK(m1[0].abs_residual == expected.str());
    CHECK(m1[0].lhs_rendered == URational(up({0, 1}), up({1, -1}).pow(2)).str());
    CHECK(m1[0].rhs_rendered == "u");
}

TEST_CASE("corollary4 residuals are reported as computed") {
    const auto reports = verify_stirling("corollary4", 4);
    const auto& m1 = *find(reports, "1");
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].verdict == Verdict::fail);
    CHECK(m1[0].lhs_rendered == "-1/2");
    CHECK(m1[0].rhs_rendered == "-2");
    CHECK(m1[0].abs_residual == "3/2");
}

TEST_CASE("classical cross-identity ties the modules together") {
    const auto reports = verify_stirling("cross-identity", 12);
    CHECK(reports.size() == 13);
    for (const auto& r : reports) CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("triangle oracle check") {
    const auto reports = verify_stirling("triangle-oracle", 8);
    CHECK(reports.size() == 9);
    for (const auto& r : reports) CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("unknown id") { CHECK_THROWS_AS(verify_stirling("theorem5", 3), std::invalid_argument); }
