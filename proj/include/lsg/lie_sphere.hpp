#pragma once

#include "lsg/indefinite.hpp"

#include <array>
#include <complex>

namespace lsg {

using Complex = std::complex<double>;

enum class SphereKind { sphere, point_sphere, great_sphere };

struct OrientedSphere {
    Vector center;  // unit vector of R^{n+1}
    double radius = 0.0;
    int orientation = 1;
    SphereKind kind = SphereKind::sphere;

    static OrientedSphere sphere(Vector center, double radius, int orientation = 1);
    static OrientedSphere point_sphere(Vector center);
    static OrientedSphere great_sphere(Vector center, int orientation = 1);
};

// A null vector of signature (n+1, 2), up to nonzero scale.
class QuadricPoint {
public:
    explicit QuadricPoint(SignedVector rep);

    const SignedVector& rep() const { return rep_; }
    bool operator==(const QuadricPoint& other) const;

private:
    SignedVector rep_;
};

struct ContactElement {
    QuadricPoint k1;
    QuadricPoint k2;

    ContactElement(QuadricPoint a, QuadricPoint b);
};

// Homogeneous curvature v/u; u == 0 is the infinite curvature.
struct ProjectiveCurvature {
    double v = 0.0;
    double u = 1.0;

    ProjectiveCurvature(double v_, double u_);
    static ProjectiveCurvature finite(double lambda) { return {lambda, 1.0}; }
    static ProjectiveCurvature infinite() { return {1.0, 0.0}; }
    static ProjectiveCurvature from_radius(double xi);  // cot(xi) as (cos, sin)

    bool is_infinite(double tol = 1e-15) const;
    double value() const;   // v/u, +inf when u == 0
    double radius() const;  // arccot branch in (0, pi], 0 reserved for point spheres
    bool operator==(const ProjectiveCurvature& other) const;
};

enum class CrossRatioOrdering { standard_13_24, paper6_12_34 };

struct LieCurvatureValue {
    double value = 0.0;
    CrossRatioOrdering ordering = CrossRatioOrdering::standard_13_24;
};

struct MoebiusCoefficients {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
};

QuadricPoint sphere_to_quadric(const OrientedSphere& s);
OrientedSphere classify_quadric_point(const QuadricPoint& q);

struct ContactResult {
    bool ok = false;
    double residual = 0.0;
};
ContactResult oriented_contact(const QuadricPoint& a, const QuadricPoint& b, double tol = 1e-9);

ContactElement legendre_lift(const Vector& p, const Vector& n);
QuadricPoint curvature_sphere(const ContactElement& ce, const ProjectiveCurvature& lambda);

ProjectiveCurvature moebius_curvature(const MoebiusCoefficients& m, const ProjectiveCurvature& lambda);
// Coefficients of the curvature map induced by `t` on the line spanned by `ce`.
MoebiusCoefficients induced_moebius(const LieTransform& t, const ContactElement& ce);

LieTransform parallel_transform(double theta, const Signature& sig);

Complex cross_ratio(Complex w1, Complex w2, Complex w3, Complex w4);
LieCurvatureValue lie_curvature(const std::array<ProjectiveCurvature, 4>& lambdas, CrossRatioOrdering ordering);
LieCurvatureValue lie_curvature(const std::array<double, 4>& lambdas, CrossRatioOrdering ordering);

}  // namespace lsg
