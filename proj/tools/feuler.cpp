#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "feuler/fourier.hpp"
#include "feuler/frobenius.hpp"
#include "feuler/harness.hpp"
#include "feuler/lerch.hpp"
#include "feuler/stirling.hpp"

namespace {

using namespace feuler;

int cmd_numbers(const std::string& u_text, int max_n, const std::string& format) {
    const FrobeniusNumberTable table(max_n);
    const bool symbolic = u_text == "symbolic";
    const Rational u = symbolic ? Rational(0) : Rational::parse(u_text);
    std::vector<std::string> values;
    for (int n = 0; n <= max_n; ++n)
        values.push_back(symbolic ? table.at(n).str() : table.at(n).eval(u).str());
    if (format == "json") {
        std::cout << "[\n";
        for (int n = 0; n <= max_n; ++n) {
            std::string esc;
            for (char ch : values[static_cast<size_t>(n)]) {
                if (ch == '"' || ch == '\\') esc += '\\';
                esc += ch;
            }
            std::cout << "  {\"n\": " << n << ", \"value\": \"" << esc << "\"}" << (n < max_n ? "," : "")
                      << "\n";
        }
        std::cout << "]\n";
    } else {
        for (int n = 0; n <= max_n; ++n) std::cout << "H_" << n << " = " << values[static_cast<size_t>(n)] << "\n";
    }
    return 0;
}

int cmd_poly(int n, const std::string& u_text, const std::string& x_text) {
    if (u_text.empty() && !x_text.empty())
        throw std::invalid_argument("--x requires --u (a symbolic-u evaluation is not defined)");
    const FrobeniusNumberTable table(n);
    const XPolynomial p = fe_polynomial(n, table);
    if (u_text.empty()) {
        std::cout << "H_" << n << "(x,u) = " << p.str() << "\n";
        return 0;
    }
    const Rational u = Rational::parse(u_text);
    if (x_text.empty()) {
        const auto coeffs = p.coeffs_at_u(u);
        std::cout << "H_" << n << "(x," << u.str() << "): coefficients by ascending power of x:\n";
        for (size_t k = 0; k < coeffs.size(); ++k) std::cout << "  x^" << k << ": " << coeffs[k].str() << "\n";
        return 0;
    }
    const Rational x = Rational::parse(x_text);
    std::cout << fe_eval(p, u, x).str() << "\n";
    return 0;
}

int cmd_euler(int max_n) {
    const EulerSequence seq = euler_sequence(max_n);
    for (int n = 0; n <= max_n; ++n) {
        std::cout << "E_" << n << " = " << seq.numbers[static_cast<size_t>(n)].str() << "; E_" << n
                  << "(x):";
        for (size_t k = 0; k < seq.polynomials[static_cast<size_t>(n)].size(); ++k)
            std::cout << " " << seq.polynomials[static_cast<size_t>(n)][k].str() << (k + 1 < seq.polynomials[static_cast<size_t>(n)].size() ? "," : "");
        std::cout << "   (coefficients by ascending power of x)\n";
    }
    return 0;
}

int cmd_stirling(int max_m) {
    const Stirling2Table table(max_m);
    for (int m = 0; m <= max_m; ++m) {
        std::cout << "m=" << m << ":";
        for (int n = 0; n <= m; ++n) std::cout << " " << table.at(m, n).get_str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_fourier_coeffs(int m, bool have_n, long n, const std::string& u_text) {
    const FrobeniusNumberTable table(m + 1);
    const WPolynomial c = fourier_coeff_exact(m, table);
    if (!have_n || u_text.empty()) {
        std::cout << "a^(" << m << ")(u) = " << c.str() << "   with w = 1/((2n+1)*pi*i)\n";
        return 0;
    }
    const Rational u = Rational::parse(u_text);
    std::cout << format_complex(fourier_coeff_eval(c, n, u)) << "\n";
    return 0;
}

int cmd_lerch(const std::string& z_text, double s, double a, double tol) {
    const auto comma = z_text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--z", "expected RE,IM");
    const double re = std::stod(z_text.substr(0, comma));
    const double im = std::stod(z_text.substr(comma + 1));
    const LerchResult res = lerch_phi({re, im}, s, a, tol);
    std::cout << "value      = " << format_complex(res.value) << "\n";
    std::cout << "tail_bound = " << format_real(res.tail_bound) << "\n";
    std::cout << "terms_used = " << res.terms_used << "\n";
    if (!res.notes.empty()) std::cout << "notes      = " << res.notes << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, bool strict, const std::string& config_path,
               const std::string& out_path, const std::string& format_name) {
    SuiteConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);
    if (strict) cfg.strict = true;
    if (!format_name.empty()) cfg.output_format = parse_output_format(format_name);
    if (!out_path.empty()) cfg.output_path = out_path;

    const auto violations = validate_config(cfg);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "config error: " << v << "\n";
        return 2;
    }

    std::vector<VerificationReport> reports;
    if (suite == "all" || suite.empty()) {
        reports = run_suite(cfg);
    } else {
        std::vector<std::string> ids;
        std::stringstream ss(suite);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (!id.empty()) ids.push_back(id);
        }
        reports = run_suite(cfg, ids);
    }

    const std::string text = render_report(reports, cfg.output_format);
    if (cfg.output_path) {
        std::ofstream out(*cfg.output_path, std::ios::binary);
        if (!out) {
            std::cerr << "config error: cannot write output path: " << *cfg.output_path << "\n";
            return 2;
        }
        out << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    return suite_exit_status(reports, cfg.strict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius-Euler toolkit: exact tables, Fourier expansion, Lerch connection, "
                 "Stirling identities, and the verification harness"};
    app.require_subcommand(1);

    std::string u_text = "symbolic";
    int max_n = 10;
    std::string format = "table";
    auto* numbers = app.add_subcommand("numbers", "print H_0..H_K");
    numbers->add_option("--u", u_text, "rational u value \"p/q\" or \"symbolic\"");
    numbers->add_option("--max-n", max_n, "largest index K")->required();
    numbers->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    int poly_n = 0;
    std::string poly_u, poly_x;
    auto* poly = app.add_subcommand("poly", "print H_K(x,u) or its evaluation");
    poly->add_option("--n", poly_n, "degree K")->required();
    poly->add_option("--u", poly_u, "rational u value");
    poly->add_option("--x", poly_x, "rational x value");

    int euler_max = 10;
    auto* euler = app.add_subcommand("euler", "print E_n and E_n(x) coefficients");
    euler->add_option("--max-n", euler_max, "largest index")->required();

    int stirling_max = 8;
    auto* stirling = app.add_subcommand("stirling", "print the S2 triangle");
    stirling->add_option("--max-m", stirling_max, "largest row")->required();

    int fc_m = 0;
    long fc_n = 0;
    std::string fc_u;
    auto* fc = app.add_subcommand("fourier-coeffs", "print a^(m) as a w-polynomial or its value");
    fc->add_option("--m", fc_m, "polynomial degree")->required();
    auto* fc_n_opt = fc->add_option("--n", fc_n, "frequency index");
    fc->add_option("--u", fc_u, "rational u value");

    std::string lerch_z;
    double lerch_s = 2.0, lerch_a = 1.0, lerch_tol = 1e-10;
    auto* lerch = app.add_subcommand("lerch", "evaluate the Lerch transcendent");
    lerch->add_option("--z", lerch_z, "complex z as RE,IM")->required();
    lerch->add_option("--s", lerch_s, "exponent s")->required();
    lerch->add_option("--a", lerch_a, "shift a")->required();
    lerch->add_option("--tol", lerch_tol, "certified tolerance");

    std::string suite = "all", config_path, out_path, verify_format;
    bool strict = false;
    auto* verify = app.add_subcommand("verify", "run the verification harness");
    verify->add_option("--suite", suite, "all or comma-separated registry ids");
    verify->add_flag("--strict", strict, "reported-class residuals become fatal");
    verify->add_option("--config", config_path, "JSON config path");
    verify->add_option("--out", out_path, "output file path");
    verify->add_option("--format", verify_format, "json, markdown, or csv")
        ->check(CLI::IsMember({"json", "markdown", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // malformed invocations are configuration errors
    }

    try {
        if (numbers->parsed()) return cmd_numbers(u_text, max_n, format);
        if (poly->parsed()) return cmd_poly(poly_n, poly_u, poly_x);
        if (euler->parsed()) return cmd_euler(euler_max);
        if (stirling->parsed()) return cmd_stirling(stirling_max);
        if (fc->parsed()) return cmd_fourier_coeffs(fc_m, fc_n_opt->count() > 0, fc_n, fc_u);
        if (lerch->parsed()) return cmd_lerch(lerch_z, lerch_s, lerch_a, lerch_tol);
        if (verify->parsed()) return cmd_verify(suite, strict, config_path, out_path, verify_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
