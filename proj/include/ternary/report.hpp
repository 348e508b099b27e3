#pragma once

#include "ternary/legendre.hpp"

#include <json.hpp>

#include <string>

namespace ternary {

inline constexpr const char* report_schema_version = "1";

/// Wire format for machine-readable output: schema version, the report and
/// the wall-clock cost of producing it.
struct ReportEnvelope {
    std::string schema_version = report_schema_version;
    double timing_ms = 0.0;
    DecisionReport report;

    friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

nlohmann::json to_json(const ReportEnvelope& env);
ReportEnvelope envelope_from_json(const nlohmann::json& j);

/// Multi-line human-readable report.
std::string to_text(const DecisionReport& report, bool include_local);

/// Compact single-line form used by batch mode.
std::string one_line_summary(const DecisionReport& report);

} // namespace ternary
