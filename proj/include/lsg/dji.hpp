#pragma once

#include "lsg/certificate.hpp"
#include "lsg/indefinite.hpp"

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lsg {

// Unknown d_ji = e_j(lambda_i), indexed (j, i) with 1-based j != i.
using DerivativeLabel = std::pair<int, int>;

// A Lie row: derivative of log((x_a - x_b)(x_c - x_d) / ((x_a - x_d)(x_c - x_b))) along e_j.
struct LieRow {
    std::array<int, 4> indices;
    std::vector<int> directions;  // values of j; empty means every j
};

struct SystemConstraints {
    bool cmc = false;
    bool csc = false;
    std::vector<std::array<int, 4>> lie;  // each applied for every j
    std::vector<LieRow> auxiliary;
};

struct DerivativeSystem {
    int g = 0;
    std::vector<DerivativeLabel> labels;
    Matrix rows;
    std::vector<double> pcs;
    std::vector<int> multiplicities;
    std::set<DerivativeLabel> assumed_zero;

    int column(DerivativeLabel label) const;  // -1 if pinned or absent
};

// d_j1 = 0 for every j together with d_12 = 0.
std::set<DerivativeLabel> critical_pinning(int g, int second = 2);

DerivativeSystem build_system(int g, const std::vector<double>& pcs, int m1, int m2, const SystemConstraints& constraints,
                              const std::set<DerivativeLabel>& assumed_zero);

// Paper configurations at the given pcs.
SystemConstraints g4_cmc_csc();
SystemConstraints g4_cmc_lie();
SystemConstraints g6_cmc_lie(bool with_auxiliary);
std::set<DerivativeLabel> g4_lie_pinning();

struct KernelAnalysis {
    int unknowns = 0;
    int rank = 0;
    int kernel_dimension = 0;
    Matrix basis;  // columns span the kernel
    Vector singular_values;
    std::vector<std::string> warnings;
};

KernelAnalysis kernel_analysis(const DerivativeSystem& sys);

struct CurvatureQuadratic {
    double a = 0.0;  // mu + tau
    double b = 0.0;  // mu * tau
    double discriminant() const { return a * a - 4.0 * b; }
};

CurvatureQuadratic curvature_quadratic(double lambda, double nu, double h, int m1, int m2);
// Returns (mu, tau) with mu > tau.
std::pair<double, double> recover_pair(double lambda, double nu, double h, int m1, int m2);

// Coefficients of the Phi_h rows, h in {3, 4, 6}: u_h d_j2 + v_h d_j5 + w_h d_jh = 0.
struct PhiCoefficients {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
};
PhiCoefficients phi_coefficients(const std::vector<double>& pcs, int h);

std::vector<SignCertificate> sign_certificates(int g, const std::vector<double>& pcs);

struct Obstruction {
    double total = 0.0;
    std::array<double, 3> summands{};
};
Obstruction g6_d5_obstruction(const std::vector<double>& pcs);

}  // namespace lsg
