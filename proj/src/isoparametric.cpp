#include "lsg/isoparametric.hpp"

#include "lsg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lsg {

namespace {

double cot(double x) { return std::cos(x) / std::sin(x); }

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

bool admissible_multiplicities(int g, int m1, int m2) {
    if (m1 < 1 || m2 < 1) return false;
    switch (g) {
        case 1:
        case 3:
        case 6: return m1 == m2;
        case 2:
        case 4: return true;
        default: return false;
    }
}

IsoparametricFamily::IsoparametricFamily(int g, int m1, int m2, double theta)
    : g_(g), m1_(m1), m2_(m2), theta_(theta) {
    if (!admissible_multiplicities(g, m1, m2)) {
        fail(ErrorKind::Domain, "inadmissible (g, m1, m2) = (" + std::to_string(g) + ", " + std::to_string(m1) +
                                    ", " + std::to_string(m2) + ")");
    }
    const double half = M_PI / (2.0 * g);
    if (!(theta > -half && theta < half)) fail(ErrorKind::Domain, "theta outside (-pi/2g, pi/2g)");
}

double IsoparametricFamily::base_radius() const { return M_PI / (2.0 * g_) + theta_; }

int IsoparametricFamily::multiplicity(int i) const { return (i % 2 == 1) ? m1_ : m2_; }

int IsoparametricFamily::ambient_dim() const {
    int sum = 0;
    for (int i = 1; i <= g_; ++i) sum += multiplicity(i);
    return sum + 1;
}

std::vector<double> principal_radii(const IsoparametricFamily& fam) {
    std::vector<double> r(fam.g());
    for (int i = 0; i < fam.g(); ++i) r[i] = fam.base_radius() + i * M_PI / fam.g();
    return r;
}

std::vector<double> principal_curvatures(const IsoparametricFamily& fam) {
    auto r = principal_radii(fam);
    for (double& x : r) x = cot(x);
    return r;
}

double mean_curvature_direct(const IsoparametricFamily& fam) {
    const auto lam = principal_curvatures(fam);
    double h = 0.0;
    for (int i = 0; i < fam.g(); ++i) h += fam.multiplicity(i + 1) * lam[i];
    return h;
}

double mean_curvature(const IsoparametricFamily& fam) {
    if (fam.g() == 2) return mean_curvature_direct(fam);
    const double t = cot(fam.g() * fam.base_radius() / 2.0);
    return 0.5 * fam.g() * (fam.m1() * t - fam.m2() / t);
}

double minimal_theta(int g, int m1, int m2) {
    if (!admissible_multiplicities(g, m1, m2)) fail(ErrorKind::Domain, "inadmissible multiplicities");
    // t^2 = m2/m1 with t = cot(g theta_1 / 2).
    const double theta1 = 2.0 * std::atan(std::sqrt(static_cast<double>(m1) / m2)) / g;
    return theta1 - M_PI / (2.0 * g);
}

double theta_from_mean_curvature(int g, int m1, int m2, double h) {
    if (!admissible_multiplicities(g, m1, m2)) fail(ErrorKind::Domain, "inadmissible multiplicities");
    if (!std::isfinite(h)) fail(ErrorKind::Domain, "mean curvature must be finite");
    const double half = M_PI / (2.0 * g);
    const auto mean_at = [&](double th) { return mean_curvature(IsoparametricFamily(g, m1, m2, th)); };
    double lo = std::nextafter(-half, 0.0);
    double hi = std::nextafter(half, 0.0);
    // H decreases from +inf to -inf across the interval.
    if (!(mean_at(lo) > h && mean_at(hi) < h)) {
        fail(ErrorKind::Domain, "target mean curvature beyond representable endpoint values");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (mean_at(mid) > h) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

FamilyInvariants scalar_curvature(const IsoparametricFamily& fam) {
    const auto lam = principal_curvatures(fam);
    FamilyInvariants inv;
    inv.n = fam.ambient_dim();
    for (int i = 0; i < fam.g(); ++i) {
        inv.mean += fam.multiplicity(i + 1) * lam[i];
        inv.norm_squared += fam.multiplicity(i + 1) * lam[i] * lam[i];
    }
    inv.scalar = double(inv.n - 1) * (inv.n - 2) + inv.mean * inv.mean - inv.norm_squared;

    const double th1 = fam.base_radius();
    const double m = fam.m1();
    switch (fam.g()) {
        case 3: {
            const double c = cot(3 * th1);
            inv.scalar_specialized = 9 * m * (m - 1) * (1 + c * c);
            break;
        }
        case 4: {
            const double t = cot(2 * th1);
            const double m2 = fam.m2();
            inv.scalar_specialized = 4 * (m * (m - 1) * (1 + t * t) + m2 * (m2 - 1) * (1 + 1 / (t * t)));
            break;
        }
        case 6: {
            const double c = cot(6 * th1);
            inv.scalar_specialized = 36 * m * (m - 1) * (1 + c * c);
            break;
        }
        default: break;
    }
    if (inv.scalar_specialized && !close_rel(*inv.scalar_specialized, inv.scalar, 1e-8)) {
        fail(ErrorKind::InconsistentData, "specialized scalar curvature disagrees with the general formula");
    }
    return inv;
}

std::pair<Vector, Vector> focal_points(const Vector& p, const Vector& n, const ProjectiveCurvature& lambda) {
    if (p.size() != n.size() || std::abs(p.norm() - 1) > 1e-10 || std::abs(n.norm() - 1) > 1e-10 ||
        std::abs(p.dot(n)) > 1e-10) {
        fail(ErrorKind::Domain, "point and normal must be orthonormal");
    }
    const double xi = lambda.radius();
    Vector f = std::cos(xi) * p + std::sin(xi) * n;
    return {f, -f};
}

double distance_squared(const Vector& x, const Vector& p) {
    const double d = std::acos(std::clamp(x.dot(p), -1.0, 1.0));
    return d * d;
}

}  // namespace lsg
