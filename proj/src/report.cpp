#include "homeo/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace homeo {

namespace {

std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return format_number(v);
}

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_json(const VerificationReport& report) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"artifact_version\": " << json_string(report.artifact_version) << ",\n";
    os << "  \"seed\": " << report.seed << ",\n";
    os << "  \"checks\": [";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& c = report.checks[i];
        os << (i == 0 ? "\n" : ",\n");
        os << "    {\"name\": " << json_string(c.name) << ", \"measured\": " << json_number(c.measured)
           << ", \"target\": " << json_number(c.target) << ", \"tolerance\": " << json_number(c.tolerance)
           << ", \"relation\": " << json_string(to_string(c.relation))
           << ", \"passed\": " << (c.passed ? "true" : "false")
           << ", \"informational\": " << (c.informational ? "true" : "false") << "}";
    }
    os << (report.checks.empty() ? "],\n" : "\n  ],\n");
    os << "  \"wall_time\": " << json_number(report.wall_time) << "\n";
    os << "}\n";
    return os.str();
}

std::string sweep_csv(std::span<const C1Breakdown> rows) {
    std::string out = "t,c1_distance,sup_f_minus_id,max_diag_dev,max_offdiag\n";
    for (const auto& r : rows) {
        out += csv_number(r.t) + ',' + csv_number(r.c1_distance) + ',' + csv_number(r.sup_f_minus_id) + ',' +
               csv_number(r.max_diag_dev) + ',' + csv_number(r.max_offdiag) + '\n';
    }
    return out;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        const char* status = c.passed ? "PASS" : (c.informational ? "INFO" : "FAIL");
        os << '[' << status << "] " << c.name << ": measured " << format_number(c.measured) << ' '
           << to_string(c.relation) << ' ' << format_number(c.target) << " (tol " << format_number(c.tolerance) << ")";
        if (c.informational) os << " [informational]";
        os << '\n';
    }
    return os.str();
}

}  // namespace homeo
