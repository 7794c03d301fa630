#include "lsg/polygon.hpp"

#include "lsg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lsg {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap(double phi) {
    double r = std::fmod(phi, kTwoPi);
    if (r < 0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

// Signed distance on the circle, in (-pi, pi].
double angular_gap(double a, double b) {
    double d = std::remainder(a - b, kTwoPi);
    return d;
}

void require_g(int g) {
    if (g != 3 && g != 4 && g != 6) fail(ErrorKind::Domain, "polygon needs g in {3, 4, 6}, got " + std::to_string(g));
}

std::vector<double> rotate_left(const std::vector<double>& v, int k) {
    const int n = static_cast<int>(v.size());
    std::vector<double> out(n);
    for (int r = 0; r < n; ++r) out[r] = v[((r + k) % n + n) % n];
    return out;
}

}  // namespace

int polygon_partner(int g, int t, int i) {
    const int n = 2 * g;
    if (t % 2 == 1) {
        const int k = (t - 1) / 2;
        return ((2 * (k + i) - 1) % n + n) % n + 1;
    }
    const int j = t / 2;
    return ((2 * (j - i)) % n + n) % n + 1;
}

const char* curvature_name(int g, int i) {
    static const char* six[] = {"lambda", "mu", "nu", "rho", "sigma", "tau"};
    static const char* four[] = {"lambda", "mu", "nu", "tau"};
    static const char* three[] = {"lambda", "mu", "nu"};
    if (g == 6) return six[i - 1];
    if (g == 4) return four[i - 1];
    return three[i - 1];
}

GeodesicPolygon::GeodesicPolygon(int g, std::vector<double> vertex_angles, std::vector<std::vector<double>> radius_table)
    : g_(g), angles_(std::move(vertex_angles)), table_(std::move(radius_table)) {
    require_g(g);
    const int n = 2 * g;
    if (static_cast<int>(angles_.size()) != n || static_cast<int>(table_.size()) != n) {
        fail(ErrorKind::Shape, "polygon needs 2g vertices and 2g table rows");
    }
    double total = 0.0;
    for (int t = 0; t < n; ++t) {
        if (!std::isfinite(angles_[t]) || angles_[t] < 0.0 || angles_[t] >= kTwoPi) {
            fail(ErrorKind::Domain, "vertex angle outside [0, 2pi)");
        }
        const double arc = wrap(angles_[(t + 1) % n] - angles_[t]);
        if (arc <= 1e-12) fail(ErrorKind::Domain, "vertex angles are not strictly increasing cyclically");
        total += arc;
    }
    if (std::abs(total - kTwoPi) > 1e-9) fail(ErrorKind::Domain, "vertex angles wind more than once");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != g) fail(ErrorKind::Shape, "table row length differs from g");
        for (int i = 0; i < g; ++i) {
            if (!(row[i] > 0.0 && row[i] < M_PI)) fail(ErrorKind::Domain, "radius outside (0, pi)");
            if (i > 0 && !(row[i] > row[i - 1])) fail(ErrorKind::Domain, "table row is not strictly increasing");
        }
    }
}

GeodesicPolygon GeodesicPolygon::from_vertex_angles(int g, std::vector<double> vertex_angles) {
    require_g(g);
    const int n = 2 * g;
    if (static_cast<int>(vertex_angles.size()) != n) fail(ErrorKind::Shape, "polygon needs 2g vertex angles");
    for (double& a : vertex_angles) a = wrap(a);
    std::vector<std::vector<double>> table(n, std::vector<double>(g));
    for (int t = 1; t <= n; ++t) {
        for (int i = 1; i <= g; ++i) {
            const int s = polygon_partner(g, t, i);
            const double arc = (t % 2 == 1) ? wrap(vertex_angles[s - 1] - vertex_angles[t - 1])
                                            : wrap(vertex_angles[t - 1] - vertex_angles[s - 1]);
            table[t - 1][i - 1] = 0.5 * arc;
        }
    }
    return GeodesicPolygon(g, std::move(vertex_angles), std::move(table));
}

double GeodesicPolygon::curvature(int t, int i) const {
    const double th = radius(t, i);
    return std::cos(th) / std::sin(th);
}

Complex GeodesicPolygon::position(int t) const { return std::polar(1.0, angle(t)); }

Eigen::Vector2d GeodesicPolygon::point(int t) const { return {std::cos(angle(t)), std::sin(angle(t))}; }

Eigen::Vector2d GeodesicPolygon::normal(int t) const {
    const double s = orientation(t);
    return {-s * std::sin(angle(t)), s * std::cos(angle(t))};
}

double GeodesicPolygon::leaf_endpoint(int t, int i) const { return wrap(angle(t) + orientation(t) * 2.0 * radius(t, i)); }

int GeodesicPolygon::partner(int t, int i) const { return polygon_partner(g_, t, i); }

AngleGaps::AngleGaps(std::vector<double> odd_gaps, std::vector<double> even_gaps)
    : odd(std::move(odd_gaps)), even(std::move(even_gaps)) {
    if (odd.size() != even.size()) fail(ErrorKind::Shape, "odd and even gap sequences differ in length");
    require_g(static_cast<int>(odd.size()));
    for (const auto* seq : {&odd, &even}) {
        double sum = 0.0;
        for (double x : *seq) {
            if (!(x > 0.0 && x < M_PI)) fail(ErrorKind::Domain, "gap outside (0, pi)");
            sum += x;
        }
        if (std::abs(sum - M_PI) > 1e-12) fail(ErrorKind::Domain, "gap sequence does not sum to pi");
    }
}

AngleGaps AngleGaps::with_closers(std::vector<double> odd_free, std::vector<double> even_free) {
    odd_free.push_back(M_PI - std::accumulate(odd_free.begin(), odd_free.end(), 0.0));
    even_free.push_back(M_PI - std::accumulate(even_free.begin(), even_free.end(), 0.0));
    return AngleGaps(std::move(odd_free), std::move(even_free));
}

AngleGaps AngleGaps::uniform(int g) {
    require_g(g);
    return AngleGaps(std::vector<double>(g, M_PI / g), std::vector<double>(g, M_PI / g));
}

GeodesicPolygon angle_table(int g, const AngleGaps& gaps, double base_odd, double base_even) {
    require_g(g);
    if (gaps.g() != g) fail(ErrorKind::Shape, "gap sequences do not match g");
    if (!(base_odd > 0 && base_odd < M_PI && base_even > 0 && base_even < M_PI)) {
        fail(ErrorKind::Domain, "base radius outside (0, pi)");
    }
    const int n = 2 * g;
    std::vector<double> first(g);
    first[0] = base_odd;
    for (int i = 1; i < g; ++i) first[i] = first[i - 1] + gaps.odd[i - 1];

    // Row p^{2k+2} runs through the even gaps rotated right by k.
    const auto even_row_gaps = [&](int k) { return rotate_left(gaps.even, -k); };

    // Odd-row bases follow from the link between p^1 and p^{2i}.
    std::vector<double> base(g);
    base[0] = base_odd;
    for (int i = 2; i <= g; ++i) {
        const auto ev = even_row_gaps(i - 1);
        base[i - 1] = first[i - 1] - std::accumulate(ev.begin(), ev.begin() + (i - 1), 0.0);
    }
    const double even_offset = base_even - base_odd;

    std::vector<std::vector<double>> table(n, std::vector<double>(g));
    for (int k = 0; k < g; ++k) {
        const auto og = rotate_left(gaps.odd, k);
        const auto eg = even_row_gaps(k);
        table[2 * k][0] = base[k];
        table[2 * k + 1][0] = base[k] + even_offset;
        for (int i = 1; i < g; ++i) {
            table[2 * k][i] = table[2 * k][i - 1] + og[i - 1];
            table[2 * k + 1][i] = table[2 * k + 1][i - 1] + eg[i - 1];
        }
    }

    std::vector<double> angles(n);
    angles[0] = 0.0;
    for (int i = 1; i <= g; ++i) angles[2 * i - 1] = wrap(2.0 * first[i - 1]);
    for (int k = 1; k < g; ++k) angles[2 * k] = wrap(angles[2 * k + 1] - 2.0 * base[k]);
    return GeodesicPolygon(g, std::move(angles), std::move(table));
}

GeodesicPolygon build_parallel_polygon(int g, double theta) {
    require_g(g);
    const double half = M_PI / (2.0 * g);
    if (!(theta > -half && theta < half)) fail(ErrorKind::Domain, "theta outside (-pi/2g, pi/2g)");
    const double base = half + theta;
    return angle_table(g, AngleGaps::uniform(g), base, base);
}

AngleGaps gaps_of(const GeodesicPolygon& poly) {
    const int g = poly.g();
    std::vector<double> odd(g - 1), even(g - 1);
    for (int i = 1; i < g; ++i) {
        odd[i - 1] = poly.radius(1, i + 1) - poly.radius(1, i);
        even[i - 1] = poly.radius(2, i + 1) - poly.radius(2, i);
    }
    return AngleGaps::with_closers(std::move(odd), std::move(even));
}

std::vector<LinkPair> link_pairs(int g) {
    std::vector<LinkPair> out;
    for (int i = 1; i <= g; ++i) {
        for (int k = 0; k < g; ++k) {
            const int t = 2 * k + 1;
            out.push_back({i, t, polygon_partner(g, t, i)});
        }
    }
    return out;
}

LinkReport link_check(const GeodesicPolygon& poly) {
    LinkReport rep;
    const int g = poly.g();
    for (const auto& lp : link_pairs(g)) {
        const int lo = std::min(lp.odd_vertex, lp.even_vertex);
        const int hi = std::max(lp.odd_vertex, lp.even_vertex);
        const std::string name = curvature_name(g, lp.curvature);
        const std::string key = name + std::to_string(lo) + "=" + name + std::to_string(hi);
        const double r = std::abs(poly.curvature(lp.odd_vertex, lp.curvature) - poly.curvature(lp.even_vertex, lp.curvature));
        rep.residuals[key] = r;
        rep.max_residual = std::max(rep.max_residual, r);
        const double inc1 = std::abs(angular_gap(poly.leaf_endpoint(lp.odd_vertex, lp.curvature), poly.angle(lp.even_vertex)));
        const double inc2 = std::abs(angular_gap(poly.leaf_endpoint(lp.even_vertex, lp.curvature), poly.angle(lp.odd_vertex)));
        rep.max_incidence = std::max({rep.max_incidence, inc1, inc2});
    }
    rep.ok = rep.max_residual <= 1e-9 && rep.max_incidence <= 1e-9;
    return rep;
}

double parallel_defect(const GeodesicPolygon& poly) {
    double d = 0.0;
    for (int t = 2; t <= poly.vertex_count(); ++t) {
        for (int i = 1; i <= poly.g(); ++i) d = std::max(d, std::abs(poly.radius(t, i) - poly.radius(1, i)));
    }
    return d;
}

bool is_parallel(const GeodesicPolygon& poly) { return parallel_defect(poly) <= 1e-9; }

CurvaturePattern phi_h_pattern(int h) {
    if (h != 3 && h != 4 && h != 6) fail(ErrorKind::Domain, "Phi_h needs h in {3, 4, 6}");
    return {{1, 2, h, 5}, CrossRatioOrdering::paper6_12_34};
}

std::vector<CurvaturePattern> clc_patterns(int g) {
    switch (g) {
        case 4: return {kPhiPaired};
        case 6: return {phi_h_pattern(3), phi_h_pattern(4), phi_h_pattern(6)};
        default: return {};
    }
}

LieCurvatureValue polygon_lie_curvature(const GeodesicPolygon& poly, int t, const CurvaturePattern& pattern) {
    std::array<Complex, 4> z;
    for (int k = 0; k < 4; ++k) {
        const int i = pattern.indices[k];
        if (i < 1 || i > poly.g()) fail(ErrorKind::Domain, "curvature index outside 1..g");
        z[k] = std::polar(1.0, poly.leaf_endpoint(t, i));
    }
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            if (std::abs(z[a] - z[b]) <= 1e-12) fail(ErrorKind::DegenerateConfiguration, "coincident leaf endpoints");
        }
    }
    const Complex cr = pattern.ordering == CrossRatioOrdering::standard_13_24 ? cross_ratio(z[0], z[1], z[2], z[3])
                                                                              : cross_ratio(z[0], z[2], z[1], z[3]);
    return {cr.real(), pattern.ordering};
}

double lie_curvature_of_radii(const std::vector<double>& radii, const CurvaturePattern& pattern) {
    std::array<ProjectiveCurvature, 4> l{ProjectiveCurvature::from_radius(radii.at(pattern.indices[0] - 1)),
                                         ProjectiveCurvature::from_radius(radii.at(pattern.indices[1] - 1)),
                                         ProjectiveCurvature::from_radius(radii.at(pattern.indices[2] - 1)),
                                         ProjectiveCurvature::from_radius(radii.at(pattern.indices[3] - 1))};
    return lie_curvature(l, pattern.ordering).value;
}

}  // namespace lsg
