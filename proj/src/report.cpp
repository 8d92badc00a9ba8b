#include "feuler/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace feuler {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::reported: return "reported";
    }
    return "reported";
}

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "markdown") return OutputFormat::markdown;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string output_format_str(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::markdown: return "markdown";
        case OutputFormat::csv: return "csv";
    }
    return "json";
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    std::string s = format_real(z.real());
    const double im = z.imag();
    if (std::signbit(im)) {
        s += " - " + format_real(-im) + "i";
    } else {
        s += " + " + format_real(im) + "i";
    }
    return s;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string md_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '|') out += "\\|";
        else if (ch == '\n') out += "<br>";
        else out += ch;
    }
    return out;
}

std::string flatten_params(const std::map<std::string, std::string>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += "; ";
        out += k + "=" + v;
    }
    return out;
}

std::string render_json(const std::vector<VerificationReport>& reports) {
    if (reports.empty()) return "[]";
    std::ostringstream out;
    out << "[\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out << "  {\n";
        out << "    \"identity_id\": \"" << json_escape(r.identity_id) << "\",\n";
        out << "    \"parameters\": {";
        bool first = true;
        for (const auto& [k, v] : r.parameters) {
            out << (first ? "" : ", ") << "\"" << json_escape(k) << "\": \"" << json_escape(v) << "\"";
            first = false;
        }
        out << "},\n";
        out << "    \"lhs_rendered\": \"" << json_escape(r.lhs_rendered) << "\",\n";
        out << "    \"rhs_rendered\": \"" << json_escape(r.rhs_rendered) << "\",\n";
        out << "    \"abs_residual\": \"" << json_escape(r.abs_residual) << "\",\n";
        out << "    \"verdict\": \"" << verdict_str(r.verdict) << "\",\n";
        out << "    \"tolerance\": \"" << json_escape(r.tolerance) << "\",\n";
        out << "    \"notes\": \"" << json_escape(r.notes) << "\"\n";
        out << "  }" << (i + 1 < reports.size() ? "," : "") << "\n";
    }
    out << "]";
    return out.str();
}

std::string render_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "identity_id,parameters,lhs_rendered,rhs_rendered,abs_residual,verdict,tolerance,notes\n";
    for (const auto& r : reports) {
        out << csv_escape(r.identity_id) << "," << csv_escape(flatten_params(r.parameters)) << ","
            << csv_escape(r.lhs_rendered) << "," << csv_escape(r.rhs_rendered) << ","
            << csv_escape(r.abs_residual) << "," << verdict_str(r.verdict) << ","
            << csv_escape(r.tolerance) << "," << csv_escape(r.notes) << "\n";
    }
    return out.str();
}

std::string render_markdown(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "# Verification report\n";
    size_t i = 0;
    while (i < reports.size()) {
        const std::string& id = reports[i].identity_id;
        out << "\n## " << id << "\n\n";
        out << "| parameters | lhs | rhs | abs_residual | verdict | tolerance | notes |\n";
        out << "|---|---|---|---|---|---|---|\n";
        while (i < reports.size() && reports[i].identity_id == id) {
            const auto& r = reports[i];
            out << "| " << md_escape(flatten_params(r.parameters)) << " | " << md_escape(r.lhs_rendered)
                << " | " << md_escape(r.rhs_rendered) << " | " << md_escape(r.abs_residual) << " | "
                << verdict_str(r.verdict) << " | " << md_escape(r.tolerance) << " | " << md_escape(r.notes)
                << " |\n";
            ++i;
        }
    }
    return out.str();
}

}  // namespace

std::string render_report(const std::vector<VerificationReport>& reports, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return render_json(reports);
        case OutputFormat::csv: return render_csv(reports);
        case OutputFormat::markdown: return render_markdown(reports);
    }
    return render_json(reports);
}

}  // namespace feuler
