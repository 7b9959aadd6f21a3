#pragma once

// Rendering verification reports as text, JSON and CSV.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hhsum/verification.hpp"

namespace hhsum {

/// Keys: id, params, closed_value, closed_err, oracle_value, oracle_err,
/// abs_diff, tolerance, terms_used, status. Values are decimal strings with
/// precision_digits significant digits; error fields are numbers.
nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs);

std::string csv_header();
std::string report_to_csv(const VerificationReport& r);

std::string report_to_text(const VerificationReport& r);

enum class OutputFormat { Text, Json, Csv };

void write_reports(std::ostream& os, const std::vector<VerificationReport>& rs, OutputFormat fmt);

/// Counts by status, one line.
std::string summarize(const std::vector<VerificationReport>& rs);

}  // namespace hhsum
