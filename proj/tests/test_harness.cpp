#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "feuler/fourier.hpp"
#include "feuler/frobenius.hpp"
#include "feuler/harness.hpp"
#include "feuler/lerch.hpp"
#include "feuler/stirling.hpp"

using namespace feuler;

namespace {

std::set<std::string> registry_ids() {
    std::set<std::string> ids;
    for (const auto& e : registry()) ids.insert(e.id);
    return ids;
}

}  // namespace

TEST_CASE("registry covers every mapped source display") {
    const auto ids = registry_ids();
    for (const auto& [display, id] : source_display_coverage()) {
        INFO("display ", display, " -> ", id);
        CHECK(ids.count(id) == 1);
    }
    // every lemma/theorem/corollary and numbered equation is present
    for (const auto& key :
         {"eq10-factorization", "eq11-stirling-expansion", "eq12-partition-expansion",
          "eq13-x1-display", "eq14-lerch-connection", "eq15-lerch-series", "eq16-unrolled-recursion",
          "eq17-coefficient-integral", "eq18-fourier-expansion", "eq19-generating-function",
          "eq20-polynomial-gf", "eq25-displayed-values", "eq26-recurrence", "eq27-lemma1",
          "euler-generating-function", "theorem1", "theorem2", "theorem3", "corollary1", "corollary2",
          "corollary3", "corollary4"})
        CHECK(source_display_coverage().count(key) == 1);
}

TEST_CASE("every module check id is wired into the registry") {
    const auto ids = registry_ids();
    const auto& ops = op_coverage();
    std::set<std::string> module_ids;
    for (const auto& v : {frobenius_check_ids(), stirling_check_ids(), fourier_check_ids(),
                          lerch_check_ids()})
        module_ids.insert(v.begin(), v.end());
    for (const auto& id : module_ids) {
        INFO("module check ", id);
        REQUIRE(ops.count(id) == 1);
        CHECK(ids.count(ops.at(id)) == 1);
    }
    CHECK(module_ids.size() == ops.size());
}

TEST_CASE("config parsing and defaults") {
    const SuiteConfig defaults;
    CHECK(defaults.m_max == 12);
    CHECK(defaults.n_max == 32);
    CHECK(defaults.fourier_N_schedule == std::vector<long>{64, 256, 1024, 8192});
    CHECK(defaults.u_samples.size() == 5);
    CHECK(defaults.tol_convergence == 5e-2);
    CHECK(validate_config(defaults).empty());

    const SuiteConfig cfg = parse_config_json(R"({
        "m_max": 6,
        "u_samples": ["-3", "2", "1/2"],
        "x_samples": ["1/3", "1/2"],
        "strict": true,
        "output_format": "markdown"
    })");
    CHECK(cfg.m_max == 6);
    CHECK(cfg.n_max == 32);  // untouched default
    CHECK(cfg.u_samples == std::vector<Rational>{Rational(-3), Rational(2), Rational(1, 2)});
    CHECK(cfg.strict);
    CHECK(cfg.output_format == OutputFormat::markdown);

    CHECK_THROWS_AS(parse_config_json("{nope"), std::runtime_error);
    CHECK_THROWS_AS(parse_config_json(R"({"u_samples": [1.5]})"), std::runtime_error);
}

TEST_CASE("config validation lists every violation") {
    SuiteConfig cfg;
    cfg.u_samples.push_back(Rational(1));
    cfg.x_samples.push_back(Rational(2));
    cfg.fourier_N_schedule = {64, 48};
    const auto errs = validate_config(cfg);
    CHECK(errs.size() == 3);
}

TEST_CASE("exit status logic") {
    VerificationReport pass;
    pass.verdict = Verdict::pass;
    pass.ok = true;
    VerificationReport fail;
    fail.verdict = Verdict::fail;
    fail.ok = false;
    VerificationReport rep;
    rep.verdict = Verdict::reported;
    rep.ok = false;

    CHECK(suite_exit_status({pass, pass}, false) == 0);
    CHECK(suite_exit_status({pass, fail}, false) == 1);
    CHECK(suite_exit_status({pass, rep}, false) == 0);
    CHECK(suite_exit_status({pass, rep}, true) == 1);
    rep.ok = true;
    CHECK(suite_exit_status({pass, rep}, true) == 0);
}

TEST_CASE("render formats") {
    CHECK(render_report({}, OutputFormat::json) == "[]");

    VerificationReport r;
    r.identity_id = "lemma1";
    r.parameters = {{"n", "3"}};
    r.lhs_rendered = "a,b";  // exercises csv quoting
    r.rhs_rendered = "rhs";
    r.abs_residual = "0 (exact)";
    r.verdict = Verdict::pass;
    r.tolerance = "exact";

    const std::string csv = render_report({r}, OutputFormat::csv);
    CHECK(csv ==
          "identity_id,parameters,lhs_rendered,rhs_rendered,abs_residual,verdict,tolerance,notes\n"
          "lemma1,n=3,\"a,b\",rhs,0 (exact),pass,exact,\n");

    VerificationReport r2 = r;
    r2.identity_id = "eq26";
    const std::string md = render_report({r, r2}, OutputFormat::markdown);
    CHECK(md.find("## lemma1") != std::string::npos);
    CHECK(md.find("## eq26") != std::string::npos);

    const std::string json = render_report({r}, OutputFormat::json);
    CHECK(json.find("\"identity_id\": \"lemma1\"") != std::string::npos);
    CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
}

TEST_CASE("subset runs are deterministic and in registry order") {
    SuiteConfig cfg;
    const std::vector<std::string> ids = {"corollary4", "eq25-values"};  // out of registry order
    const auto a = run_suite(cfg, ids);
    const auto b = run_suite(cfg, ids);
    CHECK(render_report(a, OutputFormat::json) == render_report(b, OutputFormat::json));
    CHECK(render_report(a, OutputFormat::markdown) == render_report(b, OutputFormat::markdown));
    CHECK(render_report(a, OutputFormat::csv) == render_report(b, OutputFormat::csv));
    REQUIRE(!a.empty());
    CHECK(a.front().identity_id == "eq25-values");  // registry order wins
    CHECK(a.back().identity_id == "corollary4");

    CHECK_THROWS_AS(run_suite(cfg, {"not-a-check"}), std::invalid_argument);
}

TEST_CASE("literature-claim entries are reclassified as reported") {
    SuiteConfig cfg;
    const auto reports = run_suite(cfg, {"corollary4"});
    REQUIRE(!reports.empty());
    for (const auto& r : reports) {
        CHECK(r.verdict == Verdict::reported);
        CHECK(r.notes.find("arithmetic outcome") != std::string::npos);
    }
    // nonzero residual at m = 1 makes strict mode fatal
    CHECK(suite_exit_status(reports, false) == 0);
    CHECK(suite_exit_status(reports, true) == 1);
}

TEST_CASE("invalid config is rejected before any check runs") {
    SuiteConfig cfg;
    cfg.n_max = 5;
    CHECK_THROWS_AS(run_suite(cfg, {"eq25-values"}), std::invalid_argument);
}
