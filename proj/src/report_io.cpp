#include "hhsum/report_io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "hhsum/config.hpp"

namespace hhsum {

namespace {

std::string num(const Real& x) { return format_real(x, static_cast<unsigned>(config().precision_digits)); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

bool has_values(const VerificationReport& r) { return r.status != Status::Skipped; }

}  // namespace

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["id"] = r.id;
    j["params"] = r.params;
    if (has_values(r)) {
        j["closed_value"] = num(r.closed.value);
        j["closed_err"] = r.closed.err;
        j["oracle_value"] = num(r.oracle.value);
        j["oracle_err"] = r.oracle.err;
        j["abs_diff"] = r.abs_diff;
    } else {
        j["closed_value"] = nullptr;
        j["closed_err"] = nullptr;
        j["oracle_value"] = nullptr;
        j["oracle_err"] = nullptr;
        j["abs_diff"] = nullptr;
    }
    j["tolerance"] = r.tolerance;
    j["terms_used"] = r.terms_used;
    j["status"] = r.status_string();
    return j;
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back(report_to_json(r));
    return a;
}

std::string csv_header() { return "id,params,closed,oracle,diff,tol,status"; }

std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << csv_quote(r.id) << ',' << csv_quote(r.params) << ',';
    if (has_values(r))
        os << num(r.closed.value) << ',' << num(r.oracle.value) << ',' << sci(r.abs_diff);
    else
        os << ",,";
    os << ',' << sci(r.tolerance) << ',' << csv_quote(r.status_string());
    return os.str();
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << r.status_string() << "  " << r.id << "  [" << r.params << "]";
    if (has_values(r))
        os << "\n    closed = " << num(r.closed.value) << " (+-" << sci(r.closed.err) << ")"
           << "\n    oracle = " << num(r.oracle.value) << " (+-" << sci(r.oracle.err) << ")"
           << "\n    diff = " << sci(r.abs_diff) << "  tol = " << sci(r.tolerance) << "  terms = " << r.terms_used;
    if (!r.reason.empty() && r.status != Status::Skipped) os << "\n    note: " << r.reason;
    return os.str();
}

void write_reports(std::ostream& os, const std::vector<VerificationReport>& rs, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Json:
            os << reports_to_json(rs).dump(2) << '\n';
            break;
        case OutputFormat::Csv:
            os << csv_header() << '\n';
            for (const auto& r : rs) os << report_to_csv(r) << '\n';
            break;
        case OutputFormat::Text:
            for (const auto& r : rs) os << report_to_text(r) << '\n';
            os << summarize(rs) << '\n';
            break;
    }
}

std::string summarize(const std::vector<VerificationReport>& rs) {
    int v = 0, d = 0, e = 0, s = 0;
    for (const auto& r : rs) {
        switch (r.status) {
            case Status::Verified: ++v; break;
            case Status::Discrepancy: ++d; break;
            case Status::DiscrepancyExpected: ++e; break;
            case Status::Skipped: ++s; break;
        }
    }
    std::ostringstream os;
    os << rs.size() << " checks: " << v << " verified, " << d << " discrepancy, " << e << " discrepancy-expected, " << s
       << " skipped";
    return os.str();
}

}  // namespace hhsum
