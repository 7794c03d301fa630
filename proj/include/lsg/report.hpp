#pragma once

#include "lsg/polygon.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lsg {

enum class CaseStatus { pass, fail, error };

const char* to_string(CaseStatus s);
CaseStatus parse_status(const std::string& s);

struct VerificationCase {
    std::string suite;
    std::string case_id;
    std::map<std::string, std::string> params;
    CaseStatus status = CaseStatus::error;
    double residual = 0.0;
    double tolerance = 0.0;
    std::int64_t runtime_ms = 0;
    std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();  // includes "all"

// Cases are sorted by case_id. A tolerance override replaces every case tolerance.
std::vector<VerificationCase> run_suite(const std::string& name, std::uint64_t seed,
                                        std::optional<double> tolerance_override = std::nullopt);

bool all_pass(const std::vector<VerificationCase>& cases);

enum class ReportFormat { json, csv };
ReportFormat parse_format(const std::string& s);

inline constexpr const char* kReportVersion = "0.1.0";

std::string report_text(const std::vector<VerificationCase>& cases, ReportFormat format, std::uint64_t seed);
void emit_report(const std::vector<VerificationCase>& cases, const std::string& path, ReportFormat format, std::uint64_t seed);
std::vector<VerificationCase> parse_csv_report(const std::string& text);

struct SvgOptions {
    int size = 480;
    bool chords = true;
    bool labels = true;
};

std::string polygon_svg(const GeodesicPolygon& poly, const SvgOptions& options = {});
void emit_polygon_svg(const GeodesicPolygon& poly, const std::string& path, const SvgOptions& options = {});

}  // namespace lsg
