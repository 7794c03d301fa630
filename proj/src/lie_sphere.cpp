#include "lsg/lie_sphere.hpp"

#include "lsg/errors.hpp"

#include <cmath>
#include <limits>

namespace lsg {

namespace {

constexpr double kUnitTol = 1e-12;

void require_unit(const Vector& v, const char* what) {
    if (!v.allFinite() || std::abs(v.norm() - 1.0) > kUnitTol) {
        fail(ErrorKind::Domain, std::string(what) + " is not a unit vector");
    }
}

SignedVector lift(const Vector& spatial, double c, double s) {
    Vector r(spatial.size() + 2);
    r.head(spatial.size()) = spatial;
    r[spatial.size()] = c;
    r[spatial.size() + 1] = s;
    return SignedVector(Signature(static_cast<int>(spatial.size()), 2), r);
}

// v_i u_j - v_j u_i, the projective difference of two curvatures.
double pdiff(const ProjectiveCurvature& x, const ProjectiveCurvature& y) { return x.v * y.u - y.v * x.u; }

double pnorm(const ProjectiveCurvature& x) { return std::hypot(x.v, x.u); }

}  // namespace

OrientedSphere OrientedSphere::sphere(Vector center, double radius, int orientation) {
    if (!(radius > 0.0 && radius < M_PI)) fail(ErrorKind::Domain, "radius outside (0, pi)");
    if (orientation != 1 && orientation != -1) fail(ErrorKind::Domain, "orientation must be +1 or -1");
    return {std::move(center), radius, orientation, SphereKind::sphere};
}

OrientedSphere OrientedSphere::point_sphere(Vector center) {
    return {std::move(center), 0.0, 1, SphereKind::point_sphere};
}

OrientedSphere OrientedSphere::great_sphere(Vector center, int orientation) {
    if (orientation != 1 && orientation != -1) fail(ErrorKind::Domain, "orientation must be +1 or -1");
    return {std::move(center), M_PI / 2, orientation, SphereKind::great_sphere};
}

QuadricPoint::QuadricPoint(SignedVector rep) : rep_(std::move(rep)) {
    const double n2 = rep_.coords().squaredNorm();
    if (n2 == 0.0) fail(ErrorKind::MalformedRepresentative, "zero representative");
    if (std::abs(inner(rep_, rep_)) > 1e-9 * n2) fail(ErrorKind::Domain, "representative is not null");
}

bool QuadricPoint::operator==(const QuadricPoint& other) const {
    if (!(rep_.signature() == other.rep_.signature())) return false;
    const auto& a = rep_.coords();
    const auto& b = other.rep_.coords();
    const double cosine = a.dot(b) / (a.norm() * b.norm());
    return std::abs(std::abs(cosine) - 1.0) <= 1e-9;
}

ContactElement::ContactElement(QuadricPoint a, QuadricPoint b) : k1(std::move(a)), k2(std::move(b)) {
    const auto& x = k1.rep().coords();
    const auto& y = k2.rep().coords();
    if (std::abs(inner(k1.rep(), k2.rep())) > 1e-9 * x.norm() * y.norm()) {
        fail(ErrorKind::ContactViolation, "k1 and k2 are not in oriented contact");
    }
    const double cosine = x.dot(y) / (x.norm() * y.norm());
    if (std::abs(std::abs(cosine) - 1.0) <= 1e-12) fail(ErrorKind::ContactViolation, "k1 and k2 coincide");
}

ProjectiveCurvature::ProjectiveCurvature(double v_, double u_) : v(v_), u(u_) {
    if (!std::isfinite(v) || !std::isfinite(u) || (v == 0.0 && u == 0.0)) {
        fail(ErrorKind::Domain, "projective curvature (0, 0)");
    }
}

ProjectiveCurvature ProjectiveCurvature::from_radius(double xi) { return {std::cos(xi), std::sin(xi)}; }

bool ProjectiveCurvature::is_infinite(double tol) const { return std::abs(u) <= tol * pnorm(*this); }

double ProjectiveCurvature::value() const {
    if (u == 0.0) return std::numeric_limits<double>::infinity();
    return v / u;
}

double ProjectiveCurvature::radius() const {
    double vv = v, uu = u;
    if (uu < 0.0 || (uu == 0.0 && vv < 0.0)) {
        vv = -vv;
        uu = -uu;
    }
    return std::atan2(uu, vv);
}

bool ProjectiveCurvature::operator==(const ProjectiveCurvature& other) const {
    return std::abs(pdiff(*this, other)) <= 1e-9 * pnorm(*this) * pnorm(other);
}

QuadricPoint sphere_to_quadric(const OrientedSphere& s) {
    require_unit(s.center, "sphere center");
    switch (s.kind) {
        case SphereKind::point_sphere: return QuadricPoint(lift(s.center, 1.0, 0.0));
        case SphereKind::great_sphere: return QuadricPoint(lift(s.center, 0.0, s.orientation));
        case SphereKind::sphere: break;
    }
    return QuadricPoint(lift(s.center, std::cos(s.radius), s.orientation * std::sin(s.radius)));
}

OrientedSphere classify_quadric_point(const QuadricPoint& q) {
    const auto& r = q.rep().coords();
    const int p = q.rep().signature().plus;
    const double scale = r.head(p).norm();
    if (scale <= 1e-300) fail(ErrorKind::MalformedRepresentative, "zero spatial part");
    Vector center = r.head(p) / scale;
    double c = r[p] / scale;
    double s = r[p + 1] / scale;
    constexpr double eps = 1e-12;
    if (std::abs(s) <= eps) {
        if (c < 0.0) center = -center;
        return OrientedSphere::point_sphere(center);
    }
    if (std::abs(c) <= eps) return OrientedSphere::great_sphere(center, s > 0.0 ? 1 : -1);
    return OrientedSphere::sphere(center, std::atan2(std::abs(s), c), s > 0.0 ? 1 : -1);
}

ContactResult oriented_contact(const QuadricPoint& a, const QuadricPoint& b, double tol) {
    const double r = std::abs(inner(a.rep(), b.rep()));
    const double scale = a.rep().coords().norm() * b.rep().coords().norm();
    return {r <= tol * scale, r};
}

ContactElement legendre_lift(const Vector& p, const Vector& n) {
    if (p.size() != n.size()) fail(ErrorKind::Shape, "point and normal sizes differ");
    if (std::abs(p.norm() - 1.0) > 1e-10 || std::abs(n.norm() - 1.0) > 1e-10) {
        fail(ErrorKind::ContactViolation, "point or normal is not a unit vector");
    }
    if (std::abs(p.dot(n)) > 1e-10) fail(ErrorKind::ContactViolation, "normal is not orthogonal to point");
    return ContactElement(QuadricPoint(lift(p, 1.0, 0.0)), QuadricPoint(lift(n, 0.0, 1.0)));
}

QuadricPoint curvature_sphere(const ContactElement& ce, const ProjectiveCurvature& lambda) {
    const auto& sig = ce.k1.rep().signature();
    return QuadricPoint(SignedVector(sig, lambda.v * ce.k1.rep().coords() + lambda.u * ce.k2.rep().coords()));
}

ProjectiveCurvature moebius_curvature(const MoebiusCoefficients& m, const ProjectiveCurvature& lambda) {
    const double det = m.a * m.d - m.b * m.c;
    const double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
    if (scale == 0.0 || std::abs(det) <= 1e-14 * scale * scale) {
        fail(ErrorKind::SingularAction, "ad - bc vanishes");
    }
    return {m.a * lambda.v + m.c * lambda.u, m.b * lambda.v + m.d * lambda.u};
}

MoebiusCoefficients induced_moebius(const LieTransform& t, const ContactElement& ce) {
    const int p = t.signature().plus;
    const Vector& k1 = ce.k1.rep().coords();
    const Vector& k2 = ce.k2.rep().coords();
    const Vector tk1 = t.matrix() * k1;
    const Vector tk2 = t.matrix() * k2;
    // Columns hold the last two coordinates of each frame vector.
    Eigen::Matrix2d before, after;
    before << k1[p], k2[p], k1[p + 1], k2[p + 1];
    after << tk1[p], tk2[p], tk1[p + 1], tk2[p + 1];
    if (std::abs(before.determinant()) <= 1e-14) {
        fail(ErrorKind::SingularAction, "contact element frame has no (c, s) normalization");
    }
    const Eigen::Matrix2d m = after * before.inverse();
    return {m(0, 0), m(1, 0), m(0, 1), m(1, 1)};
}

LieTransform parallel_transform(double theta, const Signature& sig) {
    if (sig.minus != 2) fail(ErrorKind::SignatureMismatch, "parallel transformations need two minus slots");
    Matrix m = Matrix::Identity(sig.dim(), sig.dim());
    const int p = sig.plus;
    m(p, p) = std::cos(theta);
    m(p, p + 1) = -std::sin(theta);
    m(p + 1, p) = std::sin(theta);
    m(p + 1, p + 1) = std::cos(theta);
    return LieTransform(m, sig);
}

Complex cross_ratio(Complex w1, Complex w2, Complex w3, Complex w4) {
    const Complex d1 = w1 - w4;
    const Complex d2 = w2 - w3;
    const double scale = std::max({std::abs(w1), std::abs(w2), std::abs(w3), std::abs(w4), 1.0});
    if (std::abs(d1) <= 1e-12 * scale || std::abs(d2) <= 1e-12 * scale) {
        fail(ErrorKind::DegenerateConfiguration, "cross ratio denominator vanishes");
    }
    return (w1 - w3) * (w2 - w4) / (d1 * d2);
}

LieCurvatureValue lie_curvature(const std::array<ProjectiveCurvature, 4>& l, CrossRatioOrdering ordering) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (std::abs(pdiff(l[i], l[j])) <= 1e-10 * pnorm(l[i]) * pnorm(l[j])) {
                fail(ErrorKind::DegenerateConfiguration, "repeated curvature");
            }
        }
    }
    // The u factors cancel between numerator and denominator.
    const auto d = [&](int i, int j) { return pdiff(l[i], l[j]); };
    double value = 0.0;
    switch (ordering) {
        case CrossRatioOrdering::standard_13_24: value = d(0, 2) * d(1, 3) / (d(0, 3) * d(1, 2)); break;
        case CrossRatioOrdering::paper6_12_34: value = d(0, 1) * d(2, 3) / (d(0, 3) * d(2, 1)); break;
    }
    return {value, ordering};
}

LieCurvatureValue lie_curvature(const std::array<double, 4>& l, CrossRatioOrdering ordering) {
    return lie_curvature(std::array<ProjectiveCurvature, 4>{ProjectiveCurvature::finite(l[0]),
                                                            ProjectiveCurvature::finite(l[1]),
                                                            ProjectiveCurvature::finite(l[2]),
                                                            ProjectiveCurvature::finite(l[3])},
                         ordering);
}

}  // namespace lsg
