#include "lsg/report.hpp"

#include "lsg/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lsg {

namespace {

std::string number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_number(const std::string& s) {
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
    return std::stod(s);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
    out << text;
    out.close();
    if (!out) fail(ErrorKind::Io, "failed writing '" + path + "'");
}

std::string fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

}  // namespace

const char* to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::error: return "error";
    }
    return "error";
}

CaseStatus parse_status(const std::string& s) {
    if (s == "pass") return CaseStatus::pass;
    if (s == "fail") return CaseStatus::fail;
    if (s == "error") return CaseStatus::error;
    fail(ErrorKind::Usage, "unknown status '" + s + "'");
}

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    fail(ErrorKind::Usage, "format must be json or csv");
}

std::string report_text(const std::vector<VerificationCase>& cases, ReportFormat format, std::uint64_t seed) {
    if (format == ReportFormat::csv) {
        std::ostringstream os;
        os << "suite,case_id,status,residual,tolerance,runtime_ms,seed\n";
        for (const auto& c : cases) {
            os << c.suite << ',' << c.case_id << ',' << to_string(c.status) << ',' << number(c.residual) << ','
               << number(c.tolerance) << ',' << c.runtime_ms << ',' << c.seed << '\n';
        }
        return os.str();
    }
    nlohmann::ordered_json doc;
    doc["run"] = {{"seed", seed}, {"version", kReportVersion}};
    doc["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json j;
        j["suite"] = c.suite;
        j["case_id"] = c.case_id;
        j["params"] = c.params;
        j["status"] = to_string(c.status);
        j["residual"] = std::isfinite(c.residual) ? nlohmann::ordered_json(c.residual) : nlohmann::ordered_json(number(c.residual));
        j["tolerance"] = c.tolerance;
        j["runtime_ms"] = c.runtime_ms;
        j["seed"] = c.seed;
        doc["cases"].push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

void emit_report(const std::vector<VerificationCase>& cases, const std::string& path, ReportFormat format, std::uint64_t seed) {
    write_file(path, report_text(cases, format, seed));
}

std::vector<VerificationCase> parse_csv_report(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "suite,case_id,status,residual,tolerance,runtime_ms,seed") {
        fail(ErrorKind::Io, "missing CSV header");
    }
    std::vector<VerificationCase> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) f.push_back(item);
        if (f.size() != 7) fail(ErrorKind::Io, "CSV row must have 7 fields");
        VerificationCase c;
        c.suite = f[0];
        c.case_id = f[1];
        c.status = parse_status(f[2]);
        c.residual = parse_number(f[3]);
        c.tolerance = parse_number(f[4]);
        c.runtime_ms = std::stoll(f[5]);
        c.seed = std::stoull(f[6]);
        out.push_back(std::move(c));
    }
    return out;
}

std::string polygon_svg(const GeodesicPolygon& poly, const SvgOptions& options) {
    const double size = options.size;
    const double c = size / 2.0;
    const double r = size * 0.38;
    const auto px = [&](double phi) { return c + r * std::cos(phi); };
    const auto py = [&](double phi) { return c - r * std::sin(phi); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size << "\" height=\"" << options.size
       << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n";
    os << "  <circle class=\"geodesic\" cx=\"" << fixed(c) << "\" cy=\"" << fixed(c) << "\" r=\"" << fixed(r)
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    if (options.chords) {
        for (const auto& lp : link_pairs(poly.g())) {
            const double a = poly.angle(lp.odd_vertex), b = poly.angle(lp.even_vertex);
            os << "  <line class=\"link\" data-curvature=\"" << curvature_name(poly.g(), lp.curvature) << "\" x1=\"" << fixed(px(a))
               << "\" y1=\"" << fixed(py(a)) << "\" x2=\"" << fixed(px(b)) << "\" y2=\"" << fixed(py(b))
               << "\" stroke=\"gray\" stroke-width=\"0.6\"/>\n";
        }
    }
    for (int t = 1; t <= poly.vertex_count(); ++t) {
        const double a = poly.angle(t);
        os << "  <circle class=\"vertex\" cx=\"" << fixed(px(a)) << "\" cy=\"" << fixed(py(a)) << "\" r=\"3\" fill=\""
           << (t % 2 == 1 ? "black" : "white") << "\" stroke=\"black\"/>\n";
        if (options.labels) {
            const double lx = c + (r + 16) * std::cos(a), ly = c - (r + 16) * std::sin(a);
            os << "  <text class=\"label\" x=\"" << fixed(lx) << "\" y=\"" << fixed(ly)
               << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">p<tspan baseline-shift=\"super\" font-size=\"9\">"
               << t << "</tspan></text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

void emit_polygon_svg(const GeodesicPolygon& poly, const std::string& path, const SvgOptions& options) {
    write_file(path, polygon_svg(poly, options));
}

}  // namespace lsg
