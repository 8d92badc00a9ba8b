#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace feuler {

enum class Verdict { pass, fail, reported };

std::string verdict_str(Verdict v);

// One identity check. "pass"/"fail" is reserved for checks with a
// contractually expected outcome; claims transcribed literally from
// literature displays carry "reported" and their residuals speak for
// themselves. `ok` keeps the raw arithmetic outcome for exit-status logic
// and is not part of the serialized record.
struct VerificationReport {
    std::string identity_id;
    std::map<std::string, std::string> parameters;
    std::string lhs_rendered;
    std::string rhs_rendered;
    std::string abs_residual;  // "0 (exact)", a 15-digit real, or exact symbolic text
    Verdict verdict = Verdict::reported;
    std::string tolerance;     // numeric text or "exact"
    std::string notes;
    bool ok = true;
};

enum class OutputFormat { json, markdown, csv };

OutputFormat parse_output_format(const std::string& name);
std::string output_format_str(OutputFormat f);

// 15 significant digits, deterministic.
std::string format_real(double v);
std::string format_complex(std::complex<double> z);

// Serialize reports with stable field ordering. Formats:
//   json     - array of objects, field names in snake_case
//   markdown - one table per identity_id
//   csv      - header row + one data row per report
std::string render_report(const std::vector<VerificationReport>& reports, OutputFormat format);

}  // namespace feuler
