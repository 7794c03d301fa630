#include "lsg/dji.hpp"
#include "lsg/errors.hpp"
#include "lsg/isoparametric.hpp"
#include "lsg/report.hpp"
#include "lsg/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

namespace lsg {

namespace {

using Params = std::map<std::string, std::string>;

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

std::string padded(int k) {
    std::ostringstream os;
    os << std::setw(4) << std::setfill('0') << k;
    return os.str();
}

class Collector {
public:
    Collector(std::string suite, std::uint64_t seed, std::optional<double> tol) : suite_(std::move(suite)), seed_(seed), tol_(tol) {}

    void add(const std::string& id, Params params, double tolerance, const std::function<double()>& check) {
        VerificationCase c;
        c.suite = suite_;
        c.case_id = suite_ + "/" + id;
        c.params = std::move(params);
        c.tolerance = tol_ ? *tol_ : tolerance;
        c.seed = seed_;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.residual = check();
            c.status = (c.residual <= c.tolerance) ? CaseStatus::pass : CaseStatus::fail;
        } catch (const std::exception& e) {
            c.residual = std::numeric_limits<double>::infinity();
            c.status = CaseStatus::error;
            c.params["error"] = e.what();
        }
        c.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        cases_.push_back(std::move(c));
    }

    std::vector<VerificationCase> take() { return std::move(cases_); }

private:
    std::string suite_;
    std::uint64_t seed_;
    std::optional<double> tol_;
    std::vector<VerificationCase> cases_;
};

struct Combo {
    int g, m1, m2;
};

const std::vector<Combo>& family_combos() {
    static const std::vector<Combo> combos{{1, 1, 1}, {1, 3, 3}, {2, 1, 1}, {2, 1, 3}, {2, 4, 2}, {3, 1, 1}, {3, 2, 2},
                                           {3, 4, 4}, {3, 8, 8}, {4, 1, 1}, {4, 1, 2}, {4, 2, 1}, {4, 2, 2}, {4, 3, 4},
                                           {4, 4, 5}, {4, 1, 6}, {4, 7, 8}, {6, 1, 1}, {6, 2, 2}};
    return combos;
}

std::vector<double> theta_grid(int g, int count) {
    const double half = M_PI / (2.0 * g);
    std::vector<double> out;
    for (int k = 0; k < count; ++k) out.push_back(-half + 2 * half * (k + 0.5) / count);
    return out;
}

Params combo_params(const Combo& c, double theta) {
    return {{"g", std::to_string(c.g)}, {"m1", std::to_string(c.m1)}, {"m2", std::to_string(c.m2)}, {"theta", fmt(theta)}};
}

Vector random_unit(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vector v(dim);
    for (int k = 0; k < dim; ++k) v[k] = n(rng);
    return v / v.norm();
}

std::vector<VerificationCase> lie_invariance(std::uint64_t seed, std::optional<double> tol) {
    Collector col("lie_invariance", seed, tol);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim_pick(2, 6);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const int n = dim_pick(rng);
        const int g = (k % 2 == 0) ? 4 : 6;
        const double theta = (unif(rng) - 0.5) * M_PI / g * 0.9;
        const double scale = 0.1 + 1.4 * unif(rng);
        const std::uint64_t tseed = rng();
        col.add(padded(k), {{"n", std::to_string(n)}, {"g", std::to_string(g)}, {"theta", fmt(theta)}, {"scale", fmt(scale)}}, 1e-8,
                [&, n, g, theta, scale, tseed] {
                    const Signature sig(n + 1, 2);
                    const Vector p = random_unit(rng, n + 1);
                    Vector nrm = random_unit(rng, n + 1);
                    nrm -= nrm.dot(p) * p;
                    nrm /= nrm.norm();
                    const ContactElement ce = legendre_lift(p, nrm);
                    const LieTransform lt = random_lie_transform(sig, tseed, scale);
                    const MoebiusCoefficients mc = induced_moebius(lt, ce);
                    const auto radii = principal_radii(IsoparametricFamily(g, 1, 1, theta));
                    std::vector<ProjectiveCurvature> before, after, direct;
                    for (double r : radii) {
                        const auto lam = ProjectiveCurvature::from_radius(r);
                        before.push_back(lam);
                        after.push_back(moebius_curvature(mc, lam));
                        const Vector img = lt.matrix() * curvature_sphere(ce, lam).rep().coords();
                        direct.push_back(ProjectiveCurvature(img[n + 1], img[n + 2]));
                    }
                    double worst = 0.0;
                    for (const auto ord : {CrossRatioOrdering::standard_13_24, CrossRatioOrdering::paper6_12_34}) {
                        for (int a = 0; a + 3 < g; ++a) {
                            const std::array<ProjectiveCurvature, 4> q0{before[a], before[a + 1], before[a + 2], before[a + 3]};
                            const std::array<ProjectiveCurvature, 4> q1{after[a], after[a + 1], after[a + 2], after[a + 3]};
                            const std::array<ProjectiveCurvature, 4> q2{direct[a], direct[a + 1], direct[a + 2], direct[a + 3]};
                            const double v0 = lie_curvature(q0, ord).value;
                            worst = std::max({worst, std::abs(lie_curvature(q1, ord).value - v0),
                                              std::abs(lie_curvature(q2, ord).value - v0)});
                        }
                    }
                    return worst;
                });
    }
    return col.take();
}

GeodesicPolygon random_polygon(std::mt19937_64& rng, int g) {
    std::uniform_real_distribution<double> unif(0.0, 2 * M_PI);
    for (;;) {
        std::vector<double> phi(2 * g);
        for (auto& x : phi) x = unif(rng);
        std::sort(phi.begin(), phi.end());
        bool ok = true;
        for (int k = 0; k < 2 * g; ++k) {
            const double next = (k + 1 < 2 * g) ? phi[k + 1] : phi[0] + 2 * M_PI;
            if (next - phi[k] < 1e-3) ok = false;
        }
        if (ok) return GeodesicPolygon::from_vertex_angles(g, phi);
    }
}

std::vector<VerificationCase> cross_ratio_identity(std::uint64_t seed, std::optional<double> tol) {
    Collector col("cross_ratio_identity", seed, tol);
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    std::uniform_real_distribution<double> unif(0.05, M_PI - 0.05);
    for (int k = 0; k < 200; ++k) {
        col.add("radii/" + padded(k), {}, 1e-10, [&] {
            std::array<double, 4> r{};
            for (;;) {
                for (auto& x : r) x = unif(rng);
                bool ok = true;
                for (int a = 0; a < 4; ++a)
                    for (int b = a + 1; b < 4; ++b) ok = ok && std::abs(r[a] - r[b]) > 1e-3;
                if (ok) break;
            }
            std::array<double, 4> lam{};
            std::array<Complex, 4> z{};
            for (int a = 0; a < 4; ++a) {
                lam[a] = 1.0 / std::tan(r[a]);
                z[a] = std::polar(1.0, 2 * r[a]);
            }
            const double phi = lie_curvature(lam, CrossRatioOrdering::standard_13_24).value;
            const Complex cr = cross_ratio(z[0], z[1], z[2], z[3]);
            return std::max(std::abs(phi - cr.real()), std::abs(cr.imag())) / std::max(1.0, std::abs(phi));
        });
    }
    for (int k = 0; k < 200; ++k) {
        const int g = (k % 2 == 0) ? 4 : 6;
        col.add("polygon/" + padded(k), {{"g", std::to_string(g)}}, 1e-10, [&, g] {
            const GeodesicPolygon poly = random_polygon(rng, g);
            auto patterns = clc_patterns(g);
            if (g == 4) patterns.push_back(kPhiStandard);
            double worst = 0.0;
            for (int t = 1; t <= poly.vertex_count(); ++t) {
                for (const auto& p : patterns) {
                    const double a = polygon_lie_curvature(poly, t, p).value;
                    const double b = lie_curvature_of_radii(poly.radius_table()[t - 1], p);
                    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
                }
            }
            return worst;
        });
    }
    return col.take();
}

std::vector<VerificationCase> isoparametric_formulas(std::uint64_t seed, std::optional<double> tol) {
    Collector col("isoparametric_formulas", seed, tol);
    for (const auto& c : family_combos()) {
        const std::string tag = "g" + std::to_string(c.g) + "m" + std::to_string(c.m1) + "-" + std::to_string(c.m2);
        int k = 0;
        for (double theta : theta_grid(c.g, 20)) {
            const auto params = combo_params(c, theta);
            const std::string id = tag + "/" + padded(k++);
            col.add(id + "/mean", params, 1e-9, [=] {
                const IsoparametricFamily fam(c.g, c.m1, c.m2, theta);
                const double direct = mean_curvature_direct(fam);
                return std::abs(mean_curvature(fam) - direct) / std::max(1.0, std::abs(direct));
            });
            col.add(id + "/theta_roundtrip", params, 1e-10, [=] {
                const double h = mean_curvature(IsoparametricFamily(c.g, c.m1, c.m2, theta));
                return std::abs(theta_from_mean_curvature(c.g, c.m1, c.m2, h) - theta);
            });
            if (c.g == 3 || c.g == 4 || c.g == 6) {
                col.add(id + "/scalar", params, 1e-8, [=] {
                    const auto inv = scalar_curvature(IsoparametricFamily(c.g, c.m1, c.m2, theta));
                    return std::abs(*inv.scalar_specialized - inv.scalar) / std::max(1.0, std::abs(inv.scalar));
                });
            }
        }
        col.add(tag + "/minimal", combo_params(c, minimal_theta(c.g, c.m1, c.m2)), 1e-10, [=] {
            return std::abs(mean_curvature_direct(IsoparametricFamily(c.g, c.m1, c.m2, minimal_theta(c.g, c.m1, c.m2))));
        });
    }
    col.add("g4/minimal_scalar", {}, 1e-8, [] {
        double worst = 0.0;
        for (int m1 = 1; m1 <= 6; ++m1) {
            for (int m2 = 1; m2 <= 6; ++m2) {
                const auto inv = scalar_curvature(IsoparametricFamily(4, m1, m2, minimal_theta(4, m1, m2)));
                const double expected = 4.0 * (m1 + m2) * (m1 + m2 - 2);
                worst = std::max(worst, std::abs(inv.scalar - expected) / std::max(1.0, expected));
            }
        }
        return worst;
    });
    col.add("g6/minimal_scalar", {}, 1e-8, [] {
        double worst = 0.0;
        for (int m : {1, 2}) {
            const auto inv = scalar_curvature(IsoparametricFamily(6, m, m, 0.0));
            worst = std::max(worst, std::abs(inv.scalar - 36.0 * m * (m - 1)));
        }
        return worst;
    });
    return col.take();
}

double max_gap_error(const AngleGaps& gaps, double target) {
    double worst = 0.0;
    for (double x : gaps.odd) worst = std::max(worst, std::abs(x - target));
    for (double x : gaps.even) worst = std::max(worst, std::abs(x - target));
    return worst;
}

std::vector<VerificationCase> angle_solvers(std::uint64_t seed, std::optional<double> tol) {
    Collector col("angle_solvers", seed, tol);
    col.add("g4/solution_quarter_pi", {{"g", "4"}}, 1e-10, [] { return max_gap_error(solve_g4_normalized(), M_PI / 4); });
    col.add("g6/solution_sixth_pi", {{"g", "6"}}, 1e-10, [] { return max_gap_error(solve_g6_normalized(), M_PI / 6); });
    col.add("g6/psi_minus_one", {{"g", "6"}}, 1e-9, [] {
        double worst = 0.0;
        for (double v : psi_values(solve_g6_normalized())) worst = std::max(worst, std::abs(v + 1.0));
        return worst;
    });
    col.add("g6/branch_analysis", {{"g", "6"}}, 0.0, [] {
        const auto sol = solve_g6_normalized_detailed();
        int accepted = 0;
        for (const auto& b : sol.branches) accepted += b.accepted ? 1 : 0;
        return std::abs(accepted - 1.0);
    });
    int k = 0;
    for (double theta : theta_grid(4, 25)) {
        col.add("g4/parallel_residual/" + padded(k++), {{"theta", fmt(theta)}}, 1e-10, [=] {
            return std::abs(g4_residual(gaps_of(build_parallel_polygon(4, theta))));
        });
    }
    k = 0;
    for (double theta : theta_grid(6, 25)) {
        col.add("g6/parallel_psi/" + padded(k++), {{"theta", fmt(theta)}}, 1e-9, [=] {
            double worst = 0.0;
            for (double v : psi_values(gaps_of(build_parallel_polygon(6, theta)))) worst = std::max(worst, std::abs(v + 1.0));
            return worst;
        });
    }
    return col.take();
}

std::vector<double> family_pcs(int g, double theta) { return principal_curvatures(IsoparametricFamily(g, 1, 1, theta)); }

std::vector<VerificationCase> dji_kernels(std::uint64_t seed, std::optional<double> tol) {
    Collector col("dji_kernels", seed, tol);
    int k = 0;
    for (double theta : theta_grid(4, 9)) {
        for (const auto& [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 5}}) {
            Params p{{"theta", fmt(theta)}, {"m1", std::to_string(m1)}, {"m2", std::to_string(m2)}};
            const std::string id = padded(k++);
            col.add("g4_cmc_csc/" + id, p, 0.0, [=] {
                const auto sys = build_system(4, family_pcs(4, theta), m1, m2, g4_cmc_csc(), critical_pinning(4));
                return static_cast<double>(kernel_analysis(sys).kernel_dimension);
            });
            col.add("g4_cmc_lie/" + id, p, 0.0, [=] {
                const auto sys = build_system(4, family_pcs(4, theta), m1, m2, g4_cmc_lie(), g4_lie_pinning());
                return static_cast<double>(kernel_analysis(sys).kernel_dimension);
            });
        }
    }
    k = 0;
    for (double theta : theta_grid(6, 9)) {
        Params p{{"theta", fmt(theta)}};
        const std::string id = padded(k++);
        col.add("g6_cmc_lie/" + id, p, 0.0, [=] {
            const auto sys = build_system(6, family_pcs(6, theta), 1, 1, g6_cmc_lie(false), critical_pinning(6));
            return static_cast<double>(kernel_analysis(sys).kernel_dimension);
        });
        col.add("g6_cmc_lie_aux/" + id, p, 0.0, [=] {
            const auto sys = build_system(6, family_pcs(6, theta), 1, 1, g6_cmc_lie(true), critical_pinning(6));
            return static_cast<double>(kernel_analysis(sys).kernel_dimension);
        });
    }
    col.add("g6_counts/pinned_unknowns", {}, 0.0, [] {
        SystemConstraints none;
        const auto sys = build_system(6, family_pcs(6, 0.0), 1, 1, none, critical_pinning(6));
        return std::abs(static_cast<double>(sys.labels.size()) - 24.0);
    });
    col.add("g6_counts/cmc_reduced_unknowns", {}, 0.0, [] {
        SystemConstraints cmc;
        cmc.cmc = true;
        const auto sys = build_system(6, family_pcs(6, 0.0), 1, 1, cmc, critical_pinning(6));
        return std::abs(static_cast<double>(kernel_analysis(sys).kernel_dimension) - 18.0);
    });
    col.add("empty/kernel_is_everything", {}, 0.0, [] {
        const auto sys = build_system(4, family_pcs(4, 0.0), 1, 1, SystemConstraints{}, {});
        const auto ka = kernel_analysis(sys);
        return std::abs(static_cast<double>(ka.kernel_dimension - ka.unknowns)) + static_cast<double>(sys.rows.rows());
    });
    return col.take();
}

double certificate_failure(const std::vector<SignCertificate>& certs) {
    double worst = 0.0;
    for (const auto& c : certs) {
        if (!c.holds(1e-6)) worst = std::max(worst, 1.0 + std::abs(c.expression_value));
    }
    return worst;
}

std::vector<VerificationCase> sign_certificates_suite(std::uint64_t seed, std::optional<double> tol) {
    Collector col("sign_certificates", seed, tol);
    const double s3 = std::sqrt(3.0);
    col.add("g6/minimal_all", {}, 0.0, [] { return certificate_failure(sign_certificates(6, family_pcs(6, 0.0))); });
    col.add("g4/minimal_all", {}, 0.0, [] { return certificate_failure(sign_certificates(4, family_pcs(4, 0.0))); });
    col.add("g6/v_over_w_value", {}, 1e-12, [s3] {
        const auto certs = sign_certificates(6, family_pcs(6, 0.0));
        for (const auto& c : certs) {
            if (c.name == "1-v3/w3-v4/w4-v6/w6") return std::abs(c.expression_value - (9.0 - 2.0 * s3));
        }
        return 1.0;
    });
    col.add("g6/obstruction_value", {}, 1e-12, [s3] {
        return std::abs(g6_d5_obstruction(family_pcs(6, 0.0)).total - (-12.0 - 24.0 * s3));
    });
    int k = 0;
    for (double theta : theta_grid(4, 15)) {
        col.add("g4/grid/" + padded(k++), {{"theta", fmt(theta)}}, 0.0,
                [=] { return certificate_failure(sign_certificates(4, family_pcs(4, theta))); });
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-10.0, 10.0);
    col.add("g6/obstruction_random", {{"samples", "10000"}}, 0.0, [&] {
        double worst = 0.0;
        for (int s = 0; s < 10000; ++s) {
            std::vector<double> pcs(6);
            for (auto& x : pcs) x = unif(rng);
            std::sort(pcs.begin(), pcs.end(), std::greater<>());
            if (std::adjacent_find(pcs.begin(), pcs.end()) != pcs.end()) continue;
            const auto ob = g6_d5_obstruction(pcs);
            for (double v : ob.summands) worst = std::max(worst, v >= 0 ? 1.0 + v : 0.0);
            if (ob.total >= 0) worst = std::max(worst, 1.0 + ob.total);
        }
        return worst;
    });
    return col.take();
}

std::vector<VerificationCase> isometry_suite(std::uint64_t seed, std::optional<double> tol) {
    Collector col("isometry_reduction", seed, tol);
    const std::vector<Combo> combos{{4, 1, 1}, {4, 1, 2}, {4, 2, 1}, {4, 3, 4}, {4, 1, 6}, {4, 7, 8}, {6, 1, 1}, {6, 2, 2}};
    for (const auto& c : combos) {
        const std::string tag = "g" + std::to_string(c.g) + "m" + std::to_string(c.m1) + "-" + std::to_string(c.m2);
        int k = 0;
        for (double theta : theta_grid(c.g, 15)) {
            col.add(tag + "/" + padded(k++), combo_params(c, theta), 1e-10, [=] {
                const auto red = isometry_reduction(c.g, build_parallel_polygon(c.g, theta), c.m1, c.m2);
                double worst = std::max(std::abs(red.x), std::abs(red.y));
                if (certificate_failure(red.certificates) > 0) worst = std::max(worst, 1.0);
                return std::max(worst, red.closed_form_mismatch);
            });
        }
    }
    return col.take();
}

std::vector<VerificationCase> search_suite(std::uint64_t seed, std::optional<double> tol) {
    Collector col("constraint_search", seed, tol);
    struct Run {
        std::string id;
        int g;
        std::string constraints;
        int grid;
        bool expect_non_parallel;
    };
    const std::vector<Run> runs{{"g3_cmc", 3, "cmc", 12, false},
                                {"g4_cmc_csc", 4, "cmc,csc", 12, false},
                                {"g4_cmc_clc", 4, "cmc,clc", 12, false},
                                {"g6_cmc_clc", 6, "cmc,clc", 10, false},
                                {"g4_cmc_only_non_parallel", 4, "cmc", 12, true}};
    for (const auto& r : runs) {
        Params p{{"g", std::to_string(r.g)}, {"constraints", r.constraints}, {"grid", std::to_string(r.grid)}};
        col.add(r.id, p, 0.0, [&, r] {
            const auto res = constraint_search(r.g, parse_constraints(r.constraints), r.grid, seed);
            const double np = static_cast<double>(res.non_parallel_count());
            if (r.expect_non_parallel) return np > 0 ? 0.0 : 1.0;
            return np;
        });
    }
    return col.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lie_invariance",  "cross_ratio_identity", "isoparametric_formulas",
                                                "angle_solvers",   "dji_kernels",          "sign_certificates",
                                                "isometry_reduction", "constraint_search", "all"};
    return names;
}

std::vector<VerificationCase> run_suite(const std::string& name, std::uint64_t seed, std::optional<double> tolerance_override) {
    using Runner = std::vector<VerificationCase> (*)(std::uint64_t, std::optional<double>);
    static const std::map<std::string, Runner> runners{
        {"lie_invariance", lie_invariance},       {"cross_ratio_identity", cross_ratio_identity},
        {"isoparametric_formulas", isoparametric_formulas}, {"angle_solvers", angle_solvers},
        {"dji_kernels", dji_kernels},             {"sign_certificates", sign_certificates_suite},
        {"isometry_reduction", isometry_suite},   {"constraint_search", search_suite}};
    std::vector<VerificationCase> out;
    if (name == "all") {
        for (const auto& [_, run] : runners) {
            auto part = run(seed, tolerance_override);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    } else {
        const auto it = runners.find(name);
        if (it == runners.end()) fail(ErrorKind::Usage, "unknown suite '" + name + "'");
        out = it->second(seed, tolerance_override);
    }
    std::sort(out.begin(), out.end(), [](const VerificationCase& a, const VerificationCase& b) { return a.case_id < b.case_id; });
    return out;
}

bool all_pass(const std::vector<VerificationCase>& cases) {
    return std::all_of(cases.begin(), cases.end(), [](const VerificationCase& c) { return c.status == CaseStatus::pass; });
}

}  // namespace lsg
