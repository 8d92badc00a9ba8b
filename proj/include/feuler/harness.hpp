#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "feuler/rational.hpp"
#include "feuler/report.hpp"

namespace feuler {

struct SuiteConfig {
    int m_max = 12;
    int n_max = 32;  // Frobenius-Euler table depth
    std::vector<long> fourier_N_schedule = {64, 256, 1024, 8192};
    std::vector<Rational> u_samples = {Rational(-3), Rational(-1), Rational(1, 3), Rational(1, 2), Rational(2)};
    std::vector<Rational> x_samples = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
    double tol_exact_numeric = 1e-10;
    double tol_convergence = 5e-2;
    bool strict = false;
    OutputFormat output_format = OutputFormat::json;
    std::optional<std::string> output_path;
};

// Parse a UTF-8 JSON config mirroring the SuiteConfig field names; rationals
// are strings "p/q". Missing fields keep their defaults. Throws
// std::runtime_error with a descriptive message on malformed input.
SuiteConfig parse_config_json(const std::string& json_text);
SuiteConfig load_config_file(const std::string& path);

// All violations, empty when the config is valid.
std::vector<std::string> validate_config(const SuiteConfig& cfg);

struct RegistryEntry {
    std::string id;
    bool literature_claim;  // verdicts are remapped to "reported"
    std::string description;
};

// Fixed execution order of the verification registry.
const std::vector<RegistryEntry>& registry();

// Map from every implemented source display/claim to the registry id that
// covers it; the registry self-test walks this table.
const std::map<std::string, std::string>& source_display_coverage();

// Map from every module-level check id to the registry id that wires it in;
// the registry self-test fails when a module id has no harness entry.
const std::map<std::string, std::string>& op_coverage();

// Run every registry entry (or the listed subset) in registry order.
// Deterministic: identical configs yield identical report sequences.
// Throws std::invalid_argument for unknown ids and std::invalid_argument
// listing all violations for an invalid config.
std::vector<VerificationReport> run_suite(const SuiteConfig& cfg);
std::vector<VerificationReport> run_suite(const SuiteConfig& cfg, const std::vector<std::string>& ids);

// 0 on success; 1 when a pass/fail-class check failed, or, under strict,
// when a reported-class check has a residual beyond its tolerance.
int suite_exit_status(const std::vector<VerificationReport>& reports, bool strict);

}  // namespace feuler
