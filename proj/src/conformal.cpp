#include "lsg/errors.hpp"
#include "lsg/isoparametric.hpp"
#include "lsg/polygon.hpp"

#include <cmath>

namespace lsg {

namespace {

double wrap(double phi) {
    double r = std::fmod(phi, 2.0 * M_PI);
    if (r < 0) r += 2.0 * M_PI;
    if (r >= 2.0 * M_PI) r = 0.0;
    return r;
}

Matrix rotation3(double angle) {
    Matrix r = Matrix::Identity(3, 3);
    r(0, 0) = std::cos(angle);
    r(0, 1) = -std::sin(angle);
    r(1, 0) = std::sin(angle);
    r(1, 1) = std::cos(angle);
    return r;
}

Matrix boost3(double bx, double by) {
    const double r = std::hypot(bx, by);
    Matrix b = Matrix::Identity(3, 3);
    if (r == 0.0) return b;
    const double nx = bx / r, ny = by / r;
    const double ch = std::cosh(r), sh = std::sinh(r);
    b(0, 0) = 1 + (ch - 1) * nx * nx;
    b(0, 1) = (ch - 1) * nx * ny;
    b(1, 0) = b(0, 1);
    b(1, 1) = 1 + (ch - 1) * ny * ny;
    b(0, 2) = sh * nx;
    b(1, 2) = sh * ny;
    b(2, 0) = sh * nx;
    b(2, 1) = sh * ny;
    b(2, 2) = ch;
    return b;
}

}  // namespace

CircleMobius::CircleMobius(Matrix m) : m_(std::move(m)) {
    const auto check = is_lie_transform(m_, Signature(2, 1), 1e-9);
    if (!check.ok) fail(ErrorKind::Domain, "matrix is not in O(2,1)");
    if (m_(2, 2) <= 0.0 || m_.determinant() <= 0.0) {
        fail(ErrorKind::Domain, "circle map must preserve orientation and the positive sheet");
    }
}

CircleMobius CircleMobius::identity() { return CircleMobius(Matrix::Identity(3, 3)); }

CircleMobius CircleMobius::from_parameters(double rotation, double boost_x, double boost_y) {
    return CircleMobius(rotation3(rotation) * boost3(boost_x, boost_y));
}

double CircleMobius::map_angle(double phi) const {
    Eigen::Vector3d v(std::cos(phi), std::sin(phi), 1.0);
    const Eigen::Vector3d w = m_ * v;
    return wrap(std::atan2(w[1], w[0]));
}

std::array<double, 2> CircleMobius::curvature_coefficients(const Eigen::Vector2d& point, const Eigen::Vector2d& normal) const {
    return {x() * point.x() + y() * point.y() + alpha_check(), x() * normal.x() + y() * normal.y()};
}

GeodesicPolygon CircleMobius::apply(const GeodesicPolygon& poly) const {
    std::vector<double> angles(poly.vertex_count());
    for (int t = 1; t <= poly.vertex_count(); ++t) angles[t - 1] = map_angle(poly.angle(t));
    return GeodesicPolygon::from_vertex_angles(poly.g(), std::move(angles));
}

NormalizationResult conformal_normalize(const GeodesicPolygon& poly) {
    const int g = poly.g();
    if (g != 4 && g != 6) fail(ErrorKind::Domain, "conformal normalization is defined for g = 4 and g = 6");
    const int opposite1 = g + 1;
    const int opposite2 = g + 2;

    const auto residual = [&](const Eigen::Vector2d& b) {
        const CircleMobius c = CircleMobius::from_parameters(0.0, b.x(), b.y());
        return Eigen::Vector2d(
            std::remainder(c.map_angle(poly.angle(opposite1)) - c.map_angle(poly.angle(1)) - M_PI, 2 * M_PI),
            std::remainder(c.map_angle(poly.angle(opposite2)) - c.map_angle(poly.angle(2)) - M_PI, 2 * M_PI));
    };

    Eigen::Vector2d b = Eigen::Vector2d::Zero();
    Eigen::Vector2d r = residual(b);
    int it = 0;
    constexpr double h = 1e-7;
    while (r.lpNorm<Eigen::Infinity>() > 1e-12) {
        if (++it > 100) fail(ErrorKind::NormalizationFailure, "Newton iteration did not converge in 100 steps");
        Eigen::Matrix2d jac;
        for (int k = 0; k < 2; ++k) {
            Eigen::Vector2d e = Eigen::Vector2d::Zero();
            e[k] = h;
            jac.col(k) = (residual(b + e) - residual(b - e)) / (2 * h);
        }
        const Eigen::Vector2d step = -jac.fullPivLu().solve(r);
        double damping = 1.0;
        Eigen::Vector2d trial = b + step;
        Eigen::Vector2d rt = residual(trial);
        while (rt.norm() >= r.norm() && damping > 1e-6) {
            damping *= 0.5;
            trial = b + damping * step;
            rt = residual(trial);
        }
        if (rt.norm() >= r.norm()) break;
        b = trial;
        r = rt;
    }
    if (r.lpNorm<Eigen::Infinity>() > 1e-12) fail(ErrorKind::NormalizationFailure, "Newton iteration stalled");

    const CircleMobius boost = CircleMobius::from_parameters(0.0, b.x(), b.y());
    const double anchor = std::remainder(poly.angle(1) - boost.map_angle(poly.angle(1)), 2 * M_PI);
    CircleMobius map(rotation3(anchor) * boost.matrix());
    GeodesicPolygon image = map.apply(poly);

    const double inc = std::max(
        std::abs(std::remainder(image.angle(opposite1) - image.angle(1) - M_PI, 2 * M_PI)),
        std::abs(std::remainder(image.angle(opposite2) - image.angle(2) - M_PI, 2 * M_PI)));
    if (inc > 1e-8) fail(ErrorKind::NormalizationFailure, "antipodal incidences not reached");
    for (const auto& pattern : clc_patterns(g)) {
        for (int t = 1; t <= poly.vertex_count(); ++t) {
            const double before = polygon_lie_curvature(poly, t, pattern).value;
            const double after = polygon_lie_curvature(image, t, pattern).value;
            if (std::abs(before - after) > 1e-8 * std::max(1.0, std::abs(before))) {
                fail(ErrorKind::NormalizationFailure, "Lie curvature changed under the circle map");
            }
        }
    }
    return {map, image, it, r.lpNorm<Eigen::Infinity>()};
}

IsometryReduction isometry_reduction(int g, const GeodesicPolygon& normalized, int m1, int m2) {
    if (g != 4 && g != 6) fail(ErrorKind::Domain, "isometry reduction is defined for g = 4 and g = 6");
    if (normalized.g() != g) fail(ErrorKind::Shape, "polygon g differs from requested g");
    if (!admissible_multiplicities(g, m1, m2)) fail(ErrorKind::Domain, "inadmissible multiplicities");
    if (!is_parallel(normalized)) fail(ErrorKind::Domain, "isometry reduction needs a parallel polygon");

    const double th1 = normalized.radius(1, 1);
    const double shift = M_PI / 2 - th1 - normalized.angle(1);
    const auto frame_point = [&](int t) {
        const double a = normalized.angle(t) + shift;
        return Eigen::Vector2d(std::cos(a), std::sin(a));
    };
    const auto frame_normal = [&](int t) {
        const double a = normalized.angle(t) + shift;
        const double s = normalized.orientation(t);
        return Eigen::Vector2d(-s * std::sin(a), s * std::cos(a));
    };

    double h = 0.0, k = 0.0;
    for (int i = 1; i <= g; ++i) {
        const int m = (i % 2 == 1) ? m1 : m2;
        h += m * normalized.curvature(1, i);
        k += m;
    }
    const double lambda = normalized.curvature(1, 1);
    const double tau = normalized.curvature(1, g);

    const std::array<std::array<int, 2>, 2> pairs =
        g == 4 ? std::array<std::array<int, 2>, 2>{{{1, 2}, {1, 3}}} : std::array<std::array<int, 2>, 2>{{{1, 2}, {4, 5}}};
    Eigen::Matrix2d sys;
    for (int r = 0; r < 2; ++r) {
        const int t = pairs[r][0], s = pairs[r][1];
        const Eigen::Vector2d dp = frame_point(t) - frame_point(s);
        const Eigen::Vector2d dn = frame_normal(t) - frame_normal(s);
        sys.row(r) = (dp * h + dn * k).transpose();
    }

    IsometryReduction out;
    out.determinant = sys.determinant();
    const Eigen::JacobiSVD<Eigen::Matrix2d> svd(sys);
    const auto sv = svd.singularValues();
    if (!(sv[1] > 1e-10 * std::max(1.0, sv[0]))) {
        fail(ErrorKind::CertificateFailure, "CMC equations do not pin the circle map");
    }
    const Eigen::Vector2d sol = sys.fullPivLu().solve(Eigen::Vector2d::Zero());
    out.x = sol.x();
    out.y = sol.y();

    const Eigen::Vector2d p1 = frame_point(1);
    const double u = p1.x(), v = p1.y();
    Eigen::Matrix2d expected = Eigen::Matrix2d::Zero();
    expected(0, 0) = 2 * u * (h - lambda * k);
    out.certificates.push_back({"H-K*lambda", h - k * lambda, Sign::negative});
    out.certificates.push_back({"H-K*tau", h - k * tau, Sign::positive});
    if (g == 4) {
        expected.row(1) = sys.row(1);
        expected(1, 1) = (v - u) * (h - tau * k);
        out.certificates.push_back({"(v-u)*(H-K*tau)", (v - u) * (h - tau * k), Sign::positive});
    } else {
        const Eigen::Vector2d p4 = frame_point(4);
        const double l = p4.y();
        expected(1, 1) = 2 * l * (h - tau * k);
        out.certificates.push_back({"l*(H-K*tau)", l * (h - tau * k), Sign::positive});
    }
    out.closed_form_mismatch = (sys - expected).cwiseAbs().maxCoeff();
    for (const auto& c : out.certificates) {
        if (!c.holds()) fail(ErrorKind::CertificateFailure, "sign certificate " + c.name + " violated");
    }
    return out;
}

}  // namespace lsg
