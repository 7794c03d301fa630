#include "lsg/errors.hpp"
#include "lsg/isoparametric.hpp"
#include "lsg/polygon.hpp"
#include "lsg/report.hpp"
#include "lsg/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>

namespace {

void print_family(int g, int m1, int m2, double theta) {
    const lsg::IsoparametricFamily fam(g, m1, m2, theta);
    const auto radii = lsg::principal_radii(fam);
    const auto pcs = lsg::principal_curvatures(fam);
    std::cout << std::setprecision(15);
    std::cout << "g " << g << " m1 " << m1 << " m2 " << m2 << " theta " << theta << " n " << fam.ambient_dim() << "\n";
    for (int i = 0; i < g; ++i) {
        std::cout << "  i=" << i + 1 << " m=" << fam.multiplicity(i + 1) << " radius " << radii[i] << " curvature " << pcs[i] << "\n";
    }
    const auto inv = lsg::scalar_curvature(fam);
    std::cout << "mean " << inv.mean << "\n|A|^2 " << inv.norm_squared << "\nscalar " << inv.scalar << "\n";
    std::cout << "minimal_theta " << lsg::minimal_theta(g, m1, m2) << "\n";
}

void print_polygon(const lsg::GeodesicPolygon& poly) {
    std::cout << std::setprecision(15);
    std::cout << "vertex,angle";
    for (int i = 1; i <= poly.g(); ++i) std::cout << ",theta" << i;
    std::cout << "\n";
    for (int t = 1; t <= poly.vertex_count(); ++t) {
        std::cout << "p" << t << "," << poly.angle(t);
        for (int i = 1; i <= poly.g(); ++i) std::cout << "," << poly.radius(t, i);
        std::cout << "\n";
    }
    const auto rep = lsg::link_check(poly);
    std::cout << "links " << (rep.ok ? "ok" : "broken") << " max_residual " << rep.max_residual << "\n";
}

void print_gaps(const lsg::AngleGaps& gaps) {
    std::cout << std::setprecision(17) << "odd";
    for (double x : gaps.odd) std::cout << " " << x;
    std::cout << "\neven";
    for (double x : gaps.even) std::cout << " " << x;
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie sphere geometry of Dupin hypersurfaces: verification driver"};
    app.require_subcommand(1);

    std::string suite = "all";
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::string out;
    std::string format = "json";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(lsg::suite_names()));
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--tol", tol, "tolerance override for every case")->check(CLI::PositiveNumber);
    verify->add_option("--out", out, "report path");
    verify->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));

    int g = 4, m1 = 1, m2 = 1;
    double theta = 0.0;
    auto* family = app.add_subcommand("family", "principal data of an isoparametric family");
    family->add_option("--g", g)->check(CLI::IsMember({1, 2, 3, 4, 6}));
    family->add_option("--m1", m1)->check(CLI::Range(1, 1000));
    family->add_option("--m2", m2)->check(CLI::Range(1, 1000));
    family->add_option("--theta", theta);

    std::string svg;
    auto* polygon = app.add_subcommand("polygon", "parallel polygon radius table and diagram");
    polygon->add_option("--g", g)->check(CLI::IsMember({3, 4, 6}));
    polygon->add_option("--theta", theta);
    polygon->add_option("--svg", svg, "write the diagram to this path");

    auto* solve = app.add_subcommand("solve-angles", "solve the normalized angle system");
    solve->add_option("--g", g)->check(CLI::IsMember({4, 6}));

    std::string constraints = "cmc";
    int grid = 10;
    bool serial = false;
    auto* search = app.add_subcommand("search", "search for polygons satisfying curvature constraints");
    search->add_option("--g", g)->check(CLI::IsMember({3, 4, 6}));
    search->add_option("--constraints", constraints);
    search->add_option("--grid", grid)->check(CLI::Range(1, 60));
    search->add_option("--seed", seed);
    search->add_option("--m1", m1)->check(CLI::Range(1, 1000));
    search->add_option("--m2", m2)->check(CLI::Range(1, 1000));
    search->add_flag("--serial", serial, "evaluate seeds on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            const auto cases = lsg::run_suite(suite, seed, tol);
            const auto fmt = lsg::parse_format(format);
            if (!out.empty()) lsg::emit_report(cases, out, fmt, seed);
            std::size_t passed = 0;
            for (const auto& c : cases) {
                if (c.status == lsg::CaseStatus::pass) {
                    ++passed;
                } else {
                    std::cout << lsg::to_string(c.status) << " " << c.case_id << " residual " << c.residual << " tolerance "
                              << c.tolerance << "\n";
                }
            }
            std::cout << suite << ": " << passed << "/" << cases.size() << " pass\n";
            return lsg::all_pass(cases) ? 0 : 1;
        }
        if (family->parsed()) {
            print_family(g, m1, m2, theta);
            return 0;
        }
        if (polygon->parsed()) {
            if (!(std::abs(theta) < M_PI / (2.0 * g))) lsg::fail(lsg::ErrorKind::Usage, "theta outside (-pi/2g, pi/2g)");
            const auto poly = lsg::build_parallel_polygon(g, theta);
            print_polygon(poly);
            if (!svg.empty()) lsg::emit_polygon_svg(poly, svg);
            return 0;
        }
        if (solve->parsed()) {
            if (g == 4) {
                print_gaps(lsg::solve_g4_normalized());
            } else {
                const auto sol = lsg::solve_g6_normalized_detailed();
                for (const auto& b : sol.branches) {
                    std::cout << (b.accepted ? "accept " : "reject ") << b.label << " x=" << b.x << " y=" << b.y << " " << b.reason << "\n";
                }
                print_gaps(sol.gaps);
                const auto psi = lsg::psi_values(sol.gaps);
                std::cout << "psi " << psi[0] << " " << psi[1] << " " << psi[2] << "\n";
            }
            return 0;
        }
        if (search->parsed()) {
            lsg::SearchOptions opt;
            opt.m1 = m1;
            opt.m2 = m2;
            opt.parallel = !serial;
            const auto res = lsg::constraint_search(g, lsg::parse_constraints(constraints), grid, seed, opt);
            std::cout << std::setprecision(12) << "seeds " << res.seeds << " converged " << res.converged << " survivors "
                      << res.survivors.size() << " non_parallel " << res.non_parallel_count() << "\n";
            for (const auto& s : res.survivors) {
                std::cout << "seed_index " << s.seed_index << " residual " << s.max_residual << " parallel_defect "
                          << s.parallel_defect << (s.parallel ? " parallel" : " non-parallel") << " angles";
                for (double a : s.polygon.vertex_angles()) std::cout << " " << a;
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const lsg::GeometryError& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == lsg::ErrorKind::Usage ? 2 : 1;
    }
    return 2;
}
