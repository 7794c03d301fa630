#include "lsg/errors.hpp"
#include "lsg/isoparametric.hpp"
#include "lsg/polygon.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace lsg;

namespace {

std::vector<double> row_gaps(const GeodesicPolygon& p, int t) {
    std::vector<double> out;
    for (int i = 1; i < p.g(); ++i) out.push_back(p.radius(t, i + 1) - p.radius(t, i));
    return out;
}

struct Configuration {
    GeodesicPolygon polygon;
    AngleGaps gaps;
    double base_odd;
    double base_even;
};

Configuration random_configuration(std::mt19937_64& rng, int g) {
    std::uniform_real_distribution<double> u(0.3, 1.0);
    std::vector<double> phi(2 * g);
    double total = 0;
    for (auto& x : phi) total += (x = u(rng));
    double acc = 0;
    for (auto& x : phi) {
        const double step = x * 2 * M_PI / total;
        x = acc;
        acc += step;
    }
    auto poly = GeodesicPolygon::from_vertex_angles(g, phi);
    auto gaps = gaps_of(poly);
    return {poly, gaps, poly.radius(1, 1), poly.radius(2, 1)};
}

double max_table_diff(const GeodesicPolygon& a, const GeodesicPolygon& b) {
    double d = 0;
    for (int t = 1; t <= a.vertex_count(); ++t)
        for (int i = 1; i <= a.g(); ++i) d = std::max(d, std::abs(a.radius(t, i) - b.radius(t, i)));
    return d;
}

}  // namespace

TEST_CASE("parallel polygons") {
    const auto oct = build_parallel_polygon(4, 0.0);
    for (int t = 1; t <= 8; ++t) CHECK(oct.angle(t) == doctest::Approx((t - 1) * M_PI / 4).epsilon(1e-14));
    const auto p = build_parallel_polygon(4, M_PI / 16);
    for (int t = 1; t <= 8; ++t) {
        const double arc = std::remainder(p.angle(t % 8 + 1) - p.angle(t), 2 * M_PI);
        const double gap = (arc < 0) ? arc + 2 * M_PI : arc;
        CHECK(gap == doctest::Approx(t % 2 == 1 ? 3 * M_PI / 8 : M_PI / 8).epsilon(1e-12));
    }
    const auto dod = build_parallel_polygon(6, 0.0);
    for (int t = 1; t <= 12; ++t) CHECK(dod.angle(t) == doctest::Approx((t - 1) * M_PI / 6).epsilon(1e-14));
    CHECK_THROWS_AS(build_parallel_polygon(5, 0.0), GeometryError);
    CHECK_THROWS_AS(build_parallel_polygon(4, 0.5), GeometryError);
}

TEST_CASE("parallel polygons carry the family curvatures") {
    for (int g : {3, 4, 6}) {
        for (double th : {-0.1, 0.0, 0.07}) {
            const auto p = build_parallel_polygon(g, th / g);
            const auto pcs = principal_curvatures(IsoparametricFamily(g, 1, 1, th / g));
            for (int t = 1; t <= 2 * g; ++t)
                for (int i = 1; i <= g; ++i) CHECK(std::abs(p.curvature(t, i) - pcs[i - 1]) < 1e-10);
        }
    }
}

TEST_CASE("polygon validation") {
    CHECK_THROWS_AS(GeodesicPolygon::from_vertex_angles(4, {0, 1, 2, 3}), GeometryError);
    CHECK_THROWS_AS(GeodesicPolygon::from_vertex_angles(4, {0, 1, 2, 3, 4, 5, 6, 6}), GeometryError);
    CHECK_THROWS_AS(AngleGaps({1, 1, 1, 1}, {1, 1, 1, 1}), GeometryError);
    CHECK_THROWS_AS(AngleGaps({M_PI / 2, M_PI / 2, 0.0}, {1, 1, M_PI - 2}), GeometryError);
    const auto oct = build_parallel_polygon(4, 0.0);
    auto table = oct.radius_table();
    std::swap(table[0][0], table[0][1]);
    CHECK_THROWS_AS(GeodesicPolygon(4, oct.vertex_angles(), table), GeometryError);
}

TEST_CASE("table rows are cyclic shifts of the gap sequences") {
    std::mt19937_64 rng(5);
    for (int g : {3, 4, 6}) {
        const auto cfg = random_configuration(rng, g);
        const auto& gaps = cfg.gaps;
        const auto p = angle_table(g, gaps, cfg.base_odd, cfg.base_even);
        for (int k = 0; k < g; ++k) {
            const auto odd = row_gaps(p, 2 * k + 1);
            const auto even = row_gaps(p, 2 * k + 2);
            for (int i = 0; i + 1 < g; ++i) {
                CHECK(std::abs(odd[i] - gaps.odd[(i + k) % g]) < 1e-12);
                CHECK(std::abs(even[i] - gaps.even[((i - k) % g + g) % g]) < 1e-12);
            }
            // Shifting row p^{2k+1} back by k recovers row p^1.
            const auto first = row_gaps(p, 1);
            std::vector<double> full(odd);
            full.push_back(gaps.odd[(g - 1 + k) % g]);
            std::rotate(full.begin(), full.begin() + (g - k) % g, full.end());
            for (int i = 0; i + 1 < g; ++i) CHECK(std::abs(full[i] - first[i]) < 1e-12);
        }
    }
}

TEST_CASE("row p^5 of the octagon table") {
    std::mt19937_64 rng(3);
    const auto cfg = random_configuration(rng, 4);
    const auto& gaps = cfg.gaps;
    const auto p = angle_table(4, gaps, cfg.base_odd, cfg.base_even);
    const auto r5 = row_gaps(p, 5);
    CHECK(r5[0] == doctest::Approx(gaps.odd[2]));
    CHECK(r5[1] == doctest::Approx(gaps.odd[3]));
    CHECK(r5[2] == doctest::Approx(gaps.odd[0]));
}

TEST_CASE("angle tables agree with radii read off the vertex positions") {
    std::mt19937_64 rng(17);
    for (int g : {3, 4, 6}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto cfg = random_configuration(rng, g);
            const auto& gaps = cfg.gaps;
            const auto p = angle_table(g, gaps, cfg.base_odd, cfg.base_even);
            CHECK(max_table_diff(p, cfg.polygon) < 1e-12);
            for (int t = 1; t <= 2 * g; ++t) CHECK(std::abs(std::remainder(p.angle(t) - cfg.polygon.angle(t), 2 * M_PI)) < 1e-12);
            CHECK(link_check(p).ok);
            const auto back = gaps_of(p);
            for (int i = 0; i < g; ++i) {
                CHECK(std::abs(back.odd[i] - gaps.odd[i]) < 1e-12);
                CHECK(std::abs(back.even[i] - gaps.even[i]) < 1e-12);
            }
        }
    }
}

TEST_CASE("link relations") {
    for (int g : {3, 4, 6}) {
        const auto rep = link_check(build_parallel_polygon(g, 0.3 / g));
        CHECK(rep.ok);
        CHECK(rep.max_residual <= 1e-12);
        CHECK(static_cast<int>(link_pairs(g).size()) == g * g);
    }
    CHECK(link_check(build_parallel_polygon(3, 0.0)).residuals.size() == 9);
    CHECK(link_check(build_parallel_polygon(4, 0.0)).residuals.count("mu1=mu4") == 1);

    const auto oct = build_parallel_polygon(4, 0.05);
    auto table = oct.radius_table();
    table[0][1] += 1e-3;
    CHECK_FALSE(link_check(GeodesicPolygon(4, oct.vertex_angles(), table)).ok);

    table = oct.radius_table();
    const double th = table[0][1];
    table[0][1] += 0.01;
    const auto rep = link_check(GeodesicPolygon(4, oct.vertex_angles(), table));
    CHECK_FALSE(rep.ok);
    const double expected = std::abs(1 / std::tan(th + 0.01) - 1 / std::tan(th));
    CHECK(rep.max_residual == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("parallel verdict") {
    CHECK(is_parallel(build_parallel_polygon(4, 0.1)));
    CHECK(is_parallel(build_parallel_polygon(6, 0.0)));
    const auto gaps = AngleGaps::with_closers({0.9, M_PI / 4, M_PI / 4}, {M_PI / 4, M_PI / 4, M_PI / 4});
    CHECK_FALSE(is_parallel(angle_table(4, gaps, 0.3, 0.3)));
    CHECK(link_check(angle_table(4, gaps, 0.3, 0.3)).ok);
}

TEST_CASE("polygon lie curvatures") {
    const auto oct = build_parallel_polygon(4, 0.0);
    const auto dod = build_parallel_polygon(6, 0.0);
    for (int t = 1; t <= 8; ++t) {
        CHECK(polygon_lie_curvature(oct, t, kPhiStandard).value == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(polygon_lie_curvature(oct, t, kPhiPaired).value == doctest::Approx(-1.0).epsilon(1e-12));
    }
    for (int t = 1; t <= 12; ++t) CHECK(polygon_lie_curvature(dod, t, kPsiNu).value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_THROWS_AS(phi_h_pattern(5), GeometryError);
    CHECK_THROWS_AS(polygon_lie_curvature(oct, 1, kPsiNu), GeometryError);

    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 50; ++rep) {
        const auto p = random_configuration(rng, 6).polygon;
        for (int t = 1; t <= 12; ++t) {
            for (const auto& pat : clc_patterns(6)) {
                CHECK(std::abs(polygon_lie_curvature(p, t, pat).value - lie_curvature_of_radii(p.radius_table()[t - 1], pat)) < 1e-9);
            }
        }
    }
}

TEST_CASE("g4 angle system") {
    CHECK(std::abs(g4_residual(AngleGaps::uniform(4))) < 1e-15);
    for (double th : {-0.3, -0.1, 0.2, 0.35}) CHECK(std::abs(g4_residual(gaps_of(build_parallel_polygon(4, th)))) <= 1e-10);
    CHECK(std::abs(g4_residual(AngleGaps::with_closers({M_PI / 3, M_PI / 6, M_PI / 4}, {M_PI / 3, M_PI / 6, M_PI / 4}))) > 0.1);
    const auto sol = solve_g4_normalized();
    for (double x : sol.odd) CHECK(std::abs(x - M_PI / 4) <= 1e-10);
    for (double x : sol.even) CHECK(std::abs(x - M_PI / 4) <= 1e-10);
    CHECK(std::abs(g4_residual(sol)) <= 1e-12);
    // The normalized family vanishes along alpha + gamma = pi/2.
    CHECK(std::abs(g4_residual(g4_normalized_family(0.6, M_PI / 2 - 0.6))) < 1e-12);
}

TEST_CASE("g6 angle system") {
    const auto sol = solve_g6_normalized_detailed();
    for (double x : sol.gaps.odd) CHECK(std::abs(x - M_PI / 6) <= 1e-10);
    for (double x : sol.gaps.even) CHECK(std::abs(x - M_PI / 6) <= 1e-10);
    int accepted = 0;
    for (const auto& b : sol.branches) {
        if (b.accepted) {
            ++accepted;
            CHECK(b.x == doctest::Approx(0.5));
            CHECK(b.y == doctest::Approx(0.5));
        }
    }
    CHECK(accepted == 1);
    const auto f = g6_xy_system(0.5, 0.5);
    CHECK(std::abs(f[0]) < 1e-15);
    CHECK(std::abs(f[1]) < 1e-15);
    const Complex w = std::polar(1.0, M_PI / 3);
    CHECK(std::abs(2.0 * (w * w + 1.0) - Complex(1.0, std::sqrt(3.0))) < 1e-12);
    CHECK(std::abs(w + w - Complex(1.0, std::sqrt(3.0))) < 1e-12);
    for (double v : psi_values(AngleGaps::uniform(6))) CHECK(v == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("psi closed forms match direct cross ratios") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.2, 1.0);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<double> odd(6);
        for (int half = 0; half < 2; ++half) {
            double sum = 0;
            for (int k = 0; k < 3; ++k) sum += (odd[3 * half + k] = u(rng));
            for (int k = 0; k < 3; ++k) odd[3 * half + k] *= (M_PI / 2) / sum;
        }
        const AngleGaps gaps(odd, odd);
        const auto closed = psi_values(gaps);
        const auto direct = psi_values_direct(gaps);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(closed[k] - direct[k]) <= 1e-10 * std::max(1.0, std::abs(direct[k])));
    }
    auto swapped = AngleGaps::uniform(6);
    swapped.odd[0] = M_PI / 6 + 0.1;
    swapped.odd[1] = M_PI / 6 - 0.1;
    swapped.even = swapped.odd;
    CHECK(std::abs(psi_values(swapped)[0] + 1.0) > 1e-3);
    CHECK_THROWS_AS(psi_values(AngleGaps::with_closers({0.3, 0.3, 0.3, 0.3, 0.3}, {0.3, 0.3, 0.3, 0.3, 0.3})), GeometryError);
}
