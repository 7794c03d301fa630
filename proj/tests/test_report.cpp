#include "lsg/errors.hpp"
#include "lsg/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace lsg;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("suites") {
    const auto iso = run_suite("isoparametric_formulas", 0);
    CHECK(iso.size() >= 600);
    CHECK(all_pass(iso));
    const auto ang = run_suite("angle_solvers", 0);
    bool sixth = false;
    for (const auto& c : ang) {
        if (c.case_id == "angle_solvers/g6/solution_sixth_pi") {
            sixth = true;
            CHECK(c.status == CaseStatus::pass);
            CHECK(c.tolerance == 1e-10);
        }
    }
    CHECK(sixth);
    CHECK(std::is_sorted(ang.begin(), ang.end(), [](const auto& a, const auto& b) { return a.case_id < b.case_id; }));
    try {
        run_suite("unknown", 0);
        FAIL("expected an error");
    } catch (const GeometryError& e) {
        CHECK(e.kind() == ErrorKind::Usage);
    }
}

TEST_CASE("suite runs are deterministic and ids unique") {
    auto a = run_suite("cross_ratio_identity", 3);
    auto b = run_suite("cross_ratio_identity", 3);
    REQUIRE(a.size() == b.size());
    std::set<std::string> ids;
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].case_id == b[k].case_id);
        CHECK(a[k].residual == b[k].residual);
        CHECK((a[k].status == CaseStatus::pass) == (a[k].residual <= a[k].tolerance));
        ids.insert(a[k].case_id);
    }
    CHECK(ids.size() == a.size());
}

TEST_CASE("tolerance override") {
    const auto tight = run_suite("sign_certificates", 0, 1e-300);
    for (const auto& c : tight) CHECK(c.tolerance == 1e-300);
}

TEST_CASE("json reports") {
    const auto empty = nlohmann::json::parse(report_text({}, ReportFormat::json, 5));
    CHECK(empty["run"]["seed"] == 5);
    CHECK(empty["run"]["version"] == kReportVersion);
    CHECK(empty["cases"].empty());

    VerificationCase c;
    c.suite = "s";
    c.case_id = "s/one";
    c.params = {{"g", "4"}};
    c.status = CaseStatus::pass;
    c.residual = 1e-13;
    c.tolerance = 1e-10;
    c.runtime_ms = 2;
    c.seed = 5;
    const auto doc = nlohmann::json::parse(report_text({c}, ReportFormat::json, 5));
    const auto& j = doc["cases"][0];
    CHECK(j["status"] == "pass");
    for (const char* key : {"suite", "case_id", "params", "status", "residual", "tolerance", "runtime_ms", "seed"}) CHECK(j.contains(key));
    CHECK(j["params"]["g"] == "4");

    const auto path = temp_path("lsg_report_test.json");
    emit_report({c}, path, ReportFormat::json, 5);
    CHECK(nlohmann::json::parse(slurp(path)) == doc);
    CHECK_THROWS_AS(emit_report({c}, "/nonexistent/dir/report.json", ReportFormat::json, 5), GeometryError);
    CHECK_THROWS_AS(parse_format("xml"), GeometryError);
}

TEST_CASE("csv reports round trip") {
    const auto cases = run_suite("dji_kernels", 0);
    const auto text = report_text(cases, ReportFormat::csv, 0);
    CHECK(text.rfind("suite,case_id,status,residual,tolerance,runtime_ms,seed\n", 0) == 0);
    const auto back = parse_csv_report(text);
    REQUIRE(back.size() == cases.size());
    for (std::size_t k = 0; k < cases.size(); ++k) {
        CHECK(back[k].suite == cases[k].suite);
        CHECK(back[k].case_id == cases[k].case_id);
        CHECK(back[k].status == cases[k].status);
        CHECK(back[k].residual == cases[k].residual);
        CHECK(back[k].tolerance == cases[k].tolerance);
        CHECK(back[k].runtime_ms == cases[k].runtime_ms);
        CHECK(back[k].seed == cases[k].seed);
    }
}

TEST_CASE("polygon diagrams") {
    const auto oct = polygon_svg(build_parallel_polygon(4, 0.0));
    const auto count = [](const std::string& s, const std::string& needle) {
        std::size_t n = 0;
        for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
        return n;
    };
    CHECK(count(oct, "class=\"vertex\"") == 8);
    CHECK(count(oct, "class=\"link\"") == 16);
    CHECK(count(oct, "class=\"label\"") == 8);
    CHECK(count(oct, "class=\"geodesic\"") == 1);
    CHECK(count(polygon_svg(build_parallel_polygon(6, 0.0)), "class=\"vertex\"") == 12);

    const auto p1 = temp_path("lsg_a.svg"), p2 = temp_path("lsg_b.svg");
    emit_polygon_svg(build_parallel_polygon(6, 0.05), p1);
    emit_polygon_svg(build_parallel_polygon(6, 0.05), p2);
    CHECK(slurp(p1) == slurp(p2));
    CHECK_THROWS_AS(emit_polygon_svg(build_parallel_polygon(6, 0.0), "/nonexistent/x.svg"), GeometryError);
}
