#pragma once

#include "lsg/certificate.hpp"
#include "lsg/indefinite.hpp"
#include "lsg/lie_sphere.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace lsg {

// Vertices are numbered p^1..p^{2g} and curvatures 1..g (largest first), as on the diagrams.
// The normal along the geodesic turns counterclockwise at odd vertices and clockwise at even ones.
class GeodesicPolygon {
public:
    GeodesicPolygon(int g, std::vector<double> vertex_angles, std::vector<std::vector<double>> radius_table);

    // Radii are read off as half-arcs between linked vertices.
    static GeodesicPolygon from_vertex_angles(int g, std::vector<double> vertex_angles);

    int g() const { return g_; }
    int vertex_count() const { return 2 * g_; }
    const std::vector<double>& vertex_angles() const { return angles_; }
    const std::vector<std::vector<double>>& radius_table() const { return table_; }

    double angle(int t) const { return angles_[t - 1]; }
    double radius(int t, int i) const { return table_[t - 1][i - 1]; }
    double curvature(int t, int i) const;
    int orientation(int t) const { return (t % 2 == 1) ? 1 : -1; }
    Complex position(int t) const;
    Eigen::Vector2d point(int t) const;
    Eigen::Vector2d normal(int t) const;
    // Where the curvature sphere i at p^t meets the geodesic again.
    double leaf_endpoint(int t, int i) const;

    // Vertex reached by leaf i from p^t.
    int partner(int t, int i) const;

private:
    int g_;
    std::vector<double> angles_;
    std::vector<std::vector<double>> table_;
};

int polygon_partner(int g, int t, int i);
const char* curvature_name(int g, int i);

struct AngleGaps {
    std::vector<double> odd;   // alpha, beta, ...
    std::vector<double> even;  // a, b, ...

    AngleGaps(std::vector<double> odd_gaps, std::vector<double> even_gaps);
    // The last gap of each sequence is filled in so that each sums to pi.
    static AngleGaps with_closers(std::vector<double> odd_free, std::vector<double> even_free);
    static AngleGaps uniform(int g);

    int g() const { return static_cast<int>(odd.size()); }
};

GeodesicPolygon build_parallel_polygon(int g, double theta);
GeodesicPolygon angle_table(int g, const AngleGaps& gaps, double base_odd, double base_even);
AngleGaps gaps_of(const GeodesicPolygon& poly);

struct LinkReport {
    bool ok = false;
    double max_residual = 0.0;
    double max_incidence = 0.0;
    std::map<std::string, double> residuals;  // "mu1=mu4" -> |cot - cot'|
};

struct LinkPair {
    int curvature;
    int odd_vertex;
    int even_vertex;
};

std::vector<LinkPair> link_pairs(int g);
LinkReport link_check(const GeodesicPolygon& poly);

double parallel_defect(const GeodesicPolygon& poly);
bool is_parallel(const GeodesicPolygon& poly);

struct CurvaturePattern {
    std::array<int, 4> indices;
    CrossRatioOrdering ordering;
};

inline constexpr CurvaturePattern kPhiStandard{{1, 2, 3, 4}, CrossRatioOrdering::standard_13_24};
inline constexpr CurvaturePattern kPhiPaired{{1, 2, 3, 4}, CrossRatioOrdering::paper6_12_34};
inline constexpr CurvaturePattern kPsiNu{{1, 2, 3, 5}, CrossRatioOrdering::paper6_12_34};
// Phi_h for h in {3, 4, 6}: (lambda - mu)(lambda_h - sigma) / ((lambda - sigma)(lambda_h - mu)).
CurvaturePattern phi_h_pattern(int h);
// The Lie curvatures held constant by the clc constraint for this g.
std::vector<CurvaturePattern> clc_patterns(int g);

LieCurvatureValue polygon_lie_curvature(const GeodesicPolygon& poly, int t, const CurvaturePattern& pattern);
double lie_curvature_of_radii(const std::vector<double>& radii, const CurvaturePattern& pattern);

Complex g4_residual(const AngleGaps& gaps);
AngleGaps g4_normalized_family(double alpha_odd, double alpha_even);
AngleGaps solve_g4_normalized();

struct G6Branch {
    std::string label;
    double x = 0.0;
    double y = 0.0;
    bool accepted = false;
    std::string reason;
};

struct G6Solution {
    AngleGaps gaps;
    std::vector<G6Branch> branches;
};

G6Solution solve_g6_normalized_detailed();
AngleGaps solve_g6_normalized();
// Closed forms in w_k = exp(2i * gap_k) together with the direct cross ratios.
std::array<double, 3> psi_values(const AngleGaps& gaps);
std::array<double, 3> psi_values_direct(const AngleGaps& gaps);
// The (x, y) = (cos 2 alpha, cos 2 gamma) system for normalized gaps with w3=w4, w1=w6, w2=w5.
std::array<double, 2> g6_xy_system(double x, double y);

class CircleMobius {
public:
    explicit CircleMobius(Matrix m);
    static CircleMobius identity();
    static CircleMobius from_parameters(double rotation, double boost_x, double boost_y);

    const Matrix& matrix() const { return m_; }
    double x() const { return m_(2, 0); }
    double y() const { return m_(2, 1); }
    double alpha_check() const { return m_(2, 2); }

    double map_angle(double phi) const;
    // (a_t, c_t) of the induced curvature map lambda -> a_t lambda + c_t at a vertex.
    std::array<double, 2> curvature_coefficients(const Eigen::Vector2d& point, const Eigen::Vector2d& normal) const;
    GeodesicPolygon apply(const GeodesicPolygon& poly) const;

private:
    Matrix m_;
};

struct NormalizationResult {
    CircleMobius map;
    GeodesicPolygon polygon;
    int iterations = 0;
    double residual = 0.0;
};

NormalizationResult conformal_normalize(const GeodesicPolygon& poly);

struct IsometryReduction {
    double x = 0.0;
    double y = 0.0;
    double determinant = 0.0;
    double closed_form_mismatch = 0.0;
    std::vector<SignCertificate> certificates;
};

IsometryReduction isometry_reduction(int g, const GeodesicPolygon& normalized, int m1, int m2);

}  // namespace lsg
