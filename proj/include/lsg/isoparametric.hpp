#pragma once

#include "lsg/indefinite.hpp"
#include "lsg/lie_sphere.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace lsg {

class IsoparametricFamily {
public:
    IsoparametricFamily(int g, int m1, int m2, double theta);

    int g() const { return g_; }
    int m1() const { return m1_; }
    int m2() const { return m2_; }
    double theta() const { return theta_; }
    double base_radius() const;   // pi/(2g) + theta
    int multiplicity(int i) const;  // 1-based index, alternating m1, m2
    int ambient_dim() const;       // n, with n - 1 = sum of multiplicities

private:
    int g_, m1_, m2_;
    double theta_;
};

bool admissible_multiplicities(int g, int m1, int m2);

std::vector<double> principal_curvatures(const IsoparametricFamily& fam);
std::vector<double> principal_radii(const IsoparametricFamily& fam);

double mean_curvature(const IsoparametricFamily& fam);         // closed form in t = cot(g*theta_1/2)
double mean_curvature_direct(const IsoparametricFamily& fam);  // sum of m_i * lambda_i

double minimal_theta(int g, int m1, int m2);
double theta_from_mean_curvature(int g, int m1, int m2, double h);

struct FamilyInvariants {
    int n = 0;
    double mean = 0.0;
    double norm_squared = 0.0;  // |A|^2 = sum m_i lambda_i^2
    double scalar = 0.0;
    std::optional<double> scalar_specialized;
};

FamilyInvariants scalar_curvature(const IsoparametricFamily& fam);

std::pair<Vector, Vector> focal_points(const Vector& p, const Vector& n, const ProjectiveCurvature& lambda);
double distance_squared(const Vector& x, const Vector& p);

}  // namespace lsg
