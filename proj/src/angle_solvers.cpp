#include "lsg/errors.hpp"
#include "lsg/polygon.hpp"

#include <cmath>

namespace lsg {

namespace {

Complex e2i(double x) { return std::polar(1.0, 2.0 * x); }

void require_normalized_g6(const AngleGaps& gaps) {
    if (gaps.g() != 6) fail(ErrorKind::Domain, "psi values need g = 6 gaps");
    const auto& o = gaps.odd;
    if (std::abs(2.0 * (o[0] + o[1] + o[2]) - M_PI) > 1e-9) {
        fail(ErrorKind::Domain, "gaps violate 2(alpha + beta + gamma) = pi");
    }
}

}  // namespace

Complex g4_residual(const AngleGaps& gaps) {
    if (gaps.g() != 4) fail(ErrorKind::Domain, "g4_residual needs g = 4 gaps");
    const double al = gaps.odd[0], be = gaps.odd[1], ga = gaps.odd[2], de = gaps.odd[3];
    return 2.0 * (1.0 + e2i(al + ga)) - e2i(al) - e2i(ga) - e2i(-de) - e2i(-be);
}

AngleGaps g4_normalized_family(double alpha_odd, double alpha_even) {
    const auto seq = [](double a) { return std::vector<double>{a, M_PI / 2 - a, M_PI / 2 - a, a}; };
    return AngleGaps(seq(alpha_odd), seq(alpha_even));
}

AngleGaps solve_g4_normalized() {
    // With alpha + beta = pi/2 = gamma + delta the residual collapses to 2(1 + e^{2i(alpha + gamma)}),
    // so alpha + gamma = pi/2; the symmetric point alpha = gamma of that line is taken.
    const auto solve = []() {
        const double alpha = M_PI / 4;
        const double gamma = M_PI / 2 - alpha;
        return std::vector<double>{alpha, M_PI / 2 - alpha, gamma, M_PI / 2 - gamma};
    };
    AngleGaps gaps(solve(), solve());
    if (std::abs(g4_residual(gaps)) > 1e-12 ||
        std::abs(g4_residual(AngleGaps(gaps.even, gaps.odd))) > 1e-12) {
        fail(ErrorKind::InconsistentData, "normalized g = 4 solution leaves a residual");
    }
    return gaps;
}

std::array<double, 2> g6_xy_system(double x, double y) {
    const double common = 5.0 * (x + y) - 4.0 * (x * y + 1.0);
    return {(x + y) * common, (x - y) * common};
}

G6Solution solve_g6_normalized_detailed() {
    std::vector<G6Branch> branches;
    const auto valid_cos = [](double x) { return x > -1.0 && x < 1.0; };

    // x + y = 0 and x - y = 0.
    branches.push_back({"x+y=0, x-y=0", 0.0, 0.0, false, "alpha = gamma = pi/4 forces beta = 0"});

    // x + y = 0 with 5(x+y) = 4(xy+1): 4x^2 - 4 = 0.
    for (double x : {1.0, -1.0}) {
        branches.push_back({"x+y=0, 5(x+y)=4(xy+1)", x, -x, false, "cos 2 alpha = +-1 forces a zero or pi/2 gap"});
    }

    // x - y = 0 with 5(x+y) = 4(xy+1): 4x^2 - 10x + 4 = 0.
    const double disc = std::sqrt(100.0 - 64.0);
    for (double x : {(10.0 - disc) / 8.0, (10.0 + disc) / 8.0}) {
        const bool ok = valid_cos(x);
        branches.push_back({"x-y=0, 5(x+y)=4(xy+1)", x, x, ok, ok ? "admissible" : "|cos 2 alpha| > 1"});
    }

    double x = 0.0;
    int accepted = 0;
    for (const auto& b : branches) {
        if (b.accepted) {
            x = b.x;
            ++accepted;
        }
    }
    if (accepted != 1) fail(ErrorKind::InconsistentData, "case analysis did not isolate one branch");

    const double alpha = 0.5 * std::acos(x);
    const double gamma = alpha;
    const double beta = M_PI / 2 - alpha - gamma;
    // w3 = w4, w1 = w6, w2 = w5.
    std::vector<double> odd{alpha, beta, gamma, gamma, beta, alpha};
    AngleGaps gaps(odd, odd);
    const auto psi = psi_values(gaps);
    for (double v : psi) {
        if (std::abs(v + 1.0) > 1e-9) fail(ErrorKind::InconsistentData, "g = 6 solution misses psi = -1");
    }
    return {gaps, branches};
}

AngleGaps solve_g6_normalized() { return solve_g6_normalized_detailed().gaps; }

std::array<double, 3> psi_values_direct(const AngleGaps& gaps) {
    require_normalized_g6(gaps);
    std::array<Complex, 13> z{};
    z[2] = 1.0;
    for (int i = 2; i <= 6; ++i) z[2 * i] = z[2 * i - 2] * e2i(gaps.odd[i - 2]);
    return {cross_ratio(z[2], z[6], z[4], z[10]).real(), cross_ratio(z[6], z[10], z[8], z[2]).real(),
            cross_ratio(z[12], z[4], z[2], z[8]).real()};
}

std::array<double, 3> psi_values(const AngleGaps& gaps) {
    require_normalized_g6(gaps);
    std::array<Complex, 7> w{};
    for (int k = 1; k <= 6; ++k) w[k] = e2i(gaps.odd[k - 1]);
    const Complex p1 = (1.0 - w[1]) * (1.0 - w[3] * w[4]) / ((1.0 + w[4]) * (1.0 + w[1] * w[3]));
    const Complex p5 = (1.0 - w[3]) * (1.0 - w[5] * w[6]) / ((1.0 + w[3]) * (1.0 + w[5] * w[6]));
    const Complex p11 = (1.0 - w[6]) * (1.0 - w[2] * w[3]) / ((1.0 + w[6]) * (1.0 + w[2] * w[3]));
    const std::array<double, 3> closed{p1.real(), p5.real(), p11.real()};
    const auto direct = psi_values_direct(gaps);
    for (int k = 0; k < 3; ++k) {
        if (std::abs(closed[k] - direct[k]) > 1e-10 * std::max(1.0, std::abs(direct[k]))) {
            fail(ErrorKind::InconsistentData, "closed-form psi disagrees with the direct cross ratio");
        }
    }
    return closed;
}

}  // namespace lsg
