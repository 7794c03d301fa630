#include "lsg/dji.hpp"

#include "lsg/errors.hpp"
#include "lsg/isoparametric.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace lsg {

namespace {

void require_decreasing(const std::vector<double>& pcs, std::size_t expected) {
    if (pcs.size() != expected) fail(ErrorKind::Shape, "principal curvature tuple has the wrong length");
    for (std::size_t k = 0; k + 1 < pcs.size(); ++k) {
        if (!std::isfinite(pcs[k]) || !(pcs[k] > pcs[k + 1])) {
            fail(ErrorKind::Domain, "principal curvatures must be finite and strictly decreasing");
        }
    }
}

// Gradient of log|cross ratio| with respect to the curvatures.
std::vector<double> log_cross_ratio_gradient(const std::vector<double>& pcs, const std::array<int, 4>& idx) {
    std::vector<double> grad(pcs.size(), 0.0);
    const int a = idx[0] - 1, b = idx[1] - 1, c = idx[2] - 1, d = idx[3] - 1;
    const std::array<std::array<int, 3>, 4> terms{{{a, b, 1}, {c, d, 1}, {a, d, -1}, {c, b, -1}}};
    for (const auto& [p, q, s] : terms) {
        const double diff = pcs[p] - pcs[q];
        grad[p] += s / diff;
        grad[q] -= s / diff;
    }
    return grad;
}

double ratio(double a, double b, double c, double d) { return (a - b) * (c - d) / ((a - d) * (c - b)); }

}  // namespace

int DerivativeSystem::column(DerivativeLabel label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::set<DerivativeLabel> critical_pinning(int g, int second) {
    std::set<DerivativeLabel> pins;
    for (int j = 2; j <= g; ++j) pins.insert({j, 1});
    pins.insert({1, second});
    return pins;
}

DerivativeSystem build_system(int g, const std::vector<double>& pcs, int m1, int m2, const SystemConstraints& constraints,
                              const std::set<DerivativeLabel>& assumed_zero) {
    if (g < 1) fail(ErrorKind::Domain, "g must be positive");
    require_decreasing(pcs, static_cast<std::size_t>(g));
    if (m1 < 1 || m2 < 1) fail(ErrorKind::Domain, "multiplicities must be positive");

    DerivativeSystem sys;
    sys.g = g;
    sys.pcs = pcs;
    sys.assumed_zero = assumed_zero;
    for (int i = 1; i <= g; ++i) sys.multiplicities.push_back((i % 2 == 1) ? m1 : m2);
    for (int j = 1; j <= g; ++j) {
        for (int i = 1; i <= g; ++i) {
            if (i != j && !assumed_zero.count({j, i})) sys.labels.push_back({j, i});
        }
    }

    std::vector<std::vector<double>> rows;
    const auto add = [&](int j, const std::vector<double>& coef) {
        std::vector<double> row(sys.labels.size(), 0.0);
        for (int i = 1; i <= g; ++i) {
            const int c = sys.column({j, i});
            if (c >= 0) row[c] += coef[i - 1];
        }
        rows.push_back(std::move(row));
    };
    const auto check_pattern = [&](const std::array<int, 4>& idx) {
        for (int i : idx) {
            if (i < 1 || i > g) fail(ErrorKind::Domain, "Lie row index outside 1..g");
        }
    };

    std::vector<double> cmc(g), csc(g);
    for (int i = 0; i < g; ++i) {
        cmc[i] = sys.multiplicities[i];
        csc[i] = sys.multiplicities[i] * pcs[i];
    }
    for (int j = 1; j <= g; ++j) {
        if (constraints.cmc) add(j, cmc);
        if (constraints.csc) add(j, csc);
        for (const auto& idx : constraints.lie) {
            check_pattern(idx);
            add(j, log_cross_ratio_gradient(pcs, idx));
        }
    }
    for (const auto& aux : constraints.auxiliary) {
        check_pattern(aux.indices);
        const auto grad = log_cross_ratio_gradient(pcs, aux.indices);
        if (aux.directions.empty()) {
            for (int j = 1; j <= g; ++j) add(j, grad);
        } else {
            for (int j : aux.directions) add(j, grad);
        }
    }

    sys.rows = Matrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(sys.labels.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < sys.labels.size(); ++c) sys.rows(r, c) = rows[r][c];
    }
    return sys;
}

SystemConstraints g4_cmc_csc() {
    SystemConstraints c;
    c.cmc = true;
    c.csc = true;
    return c;
}

SystemConstraints g4_cmc_lie() {
    SystemConstraints c;
    c.cmc = true;
    c.lie = {{1, 2, 3, 4}};
    return c;
}

std::set<DerivativeLabel> g4_lie_pinning() { return critical_pinning(4, 3); }

SystemConstraints g6_cmc_lie(bool with_auxiliary) {
    SystemConstraints c;
    c.cmc = true;
    c.lie = {{1, 2, 3, 5}, {1, 2, 4, 5}, {1, 2, 6, 5}};
    if (with_auxiliary) {
        for (int h : {2, 5, 6}) c.auxiliary.push_back({{3, 4, h, 1}, {3}});
        for (int h : {2, 5, 6}) c.auxiliary.push_back({{4, 3, h, 1}, {4}});
        for (int h : {2, 4, 5}) c.auxiliary.push_back({{6, 3, h, 1}, {6}});
        for (int h : {3, 4, 6}) c.auxiliary.push_back({{5, 2, h, 1}, {5}});
    }
    return c;
}

KernelAnalysis kernel_analysis(const DerivativeSystem& sys) {
    KernelAnalysis out;
    out.unknowns = static_cast<int>(sys.labels.size());
    if (out.unknowns == 0) return out;
    if (sys.rows.rows() == 0) {
        out.kernel_dimension = out.unknowns;
        out.basis = Matrix::Identity(out.unknowns, out.unknowns);
        return out;
    }
    Eigen::MatrixXd a = sys.rows;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    out.singular_values = svd.singularValues();
    const double threshold = 1e-9 * out.singular_values[0];
    for (Eigen::Index k = 0; k < out.singular_values.size(); ++k) {
        const double s = out.singular_values[k];
        if (s > threshold) ++out.rank;
        if (s > threshold && s < 1e3 * threshold) {
            out.warnings.push_back("singular value " + std::to_string(s) + " lies near the rank threshold");
        }
    }
    out.kernel_dimension = out.unknowns - out.rank;
    if (out.kernel_dimension > 0) out.basis = svd.matrixV().rightCols(out.kernel_dimension);
    return out;
}

CurvatureQuadratic curvature_quadratic(double lambda, double nu, double h, int m1, int m2) {
    if (m1 < 1 || m2 < 1) fail(ErrorKind::Domain, "multiplicities must be positive");
    CurvatureQuadratic q;
    q.a = (h - m1 * (lambda + nu)) / m2;
    q.b = 0.5 * (q.a * (lambda + nu) - 2.0 * lambda * nu);
    return q;
}

std::pair<double, double> recover_pair(double lambda, double nu, double h, int m1, int m2) {
    if (!(lambda > nu)) fail(ErrorKind::Domain, "need lambda > nu");
    const CurvatureQuadratic q = curvature_quadratic(lambda, nu, h, m1, m2);
    const double disc = q.discriminant();
    if (!(disc > 0.0)) fail(ErrorKind::InconsistentData, "quadratic has no distinct real roots");
    const double root = std::sqrt(disc);
    const double mu = q.a >= 0 ? (q.a + root) / 2 : 2 * q.b / (q.a - root);
    const double tau = q.b / mu;
    const double big = std::max(mu, tau), small = std::min(mu, tau);
    if (!(lambda > big && big > nu && nu > small)) {
        fail(ErrorKind::InconsistentData, "recovered curvatures do not interlace with lambda and nu");
    }
    return {big, small};
}

PhiCoefficients phi_coefficients(const std::vector<double>& pcs, int h) {
    require_decreasing(pcs, 6);
    if (h != 3 && h != 4 && h != 6) fail(ErrorKind::Domain, "h must be 3, 4 or 6");
    const double lam = pcs[0], mu = pcs[1], sig = pcs[4], lh = pcs[h - 1];
    return {(lam - lh) / ((lh - mu) * (lam - mu)), (lh - lam) / ((lam - sig) * (lh - sig)),
            (sig - mu) / ((lh - sig) * (lh - mu))};
}

std::vector<SignCertificate> sign_certificates(int g, const std::vector<double>& pcs) {
    std::vector<SignCertificate> out;
    if (g == 6) {
        require_decreasing(pcs, 6);
        const double lam = pcs[0], mu = pcs[1], nu = pcs[2], rho = pcs[3], sig = pcs[4], tau = pcs[5];
        double sum_vw = 0.0, sum_uw = 0.0;
        for (int h : {3, 4, 6}) {
            const auto c = phi_coefficients(pcs, h);
            const std::string tag = std::to_string(h);
            out.push_back({"v" + tag, c.v, h == 6 ? Sign::positive : Sign::negative});
            out.push_back({"w" + tag, c.w, h == 6 ? Sign::negative : Sign::positive});
            sum_vw += c.v / c.w;
            sum_uw += c.u / c.w;
        }
        out.push_back({"1-v3/w3-v4/w4-v6/w6", 1.0 - sum_vw, Sign::positive});
        out.push_back({"1-u3/w3-u4/w4-u6/w6", 1.0 - sum_uw, Sign::negative});

        const auto coefficient = [&](int j, int other, std::array<int, 3> hs) {
            double s = 1.0;
            for (int h : hs) s += (lam - pcs[h - 1]) * (pcs[other - 1] - pcs[h - 1]) / ((lam - pcs[j - 1]) * (pcs[other - 1] - pcs[j - 1]));
            return s;
        };
        out.push_back({"d3 coefficient - 5", coefficient(4, 3, {2, 5, 6}) - 5.0, Sign::positive});
        out.push_back({"d4 coefficient", coefficient(3, 4, {2, 5, 6}), Sign::negative});
        out.push_back({"d6 coefficient", coefficient(3, 6, {2, 4, 5}), Sign::positive});

        out.push_back({"(lambda-rho)(nu-mu)/((lambda-mu)(nu-rho))", ratio(lam, rho, nu, mu), Sign::negative});
        out.push_back({"(lambda-rho)(nu-sigma)/((lambda-sigma)(nu-rho))", ratio(lam, rho, nu, sig), Sign::positive});
        out.push_back({"(lambda-rho)(nu-tau)/((lambda-tau)(nu-rho))", ratio(lam, rho, nu, tau), Sign::positive});
        out.push_back({"(lambda-nu)(rho-mu)/((lambda-mu)(rho-nu))", ratio(lam, nu, rho, mu), Sign::positive});
        out.push_back({"(lambda-nu)(rho-sigma)/((lambda-sigma)(rho-nu))", ratio(lam, nu, rho, sig), Sign::negative});
        out.push_back({"(lambda-nu)(rho-tau)/((lambda-tau)(rho-nu))", ratio(lam, nu, rho, tau), Sign::negative});

        const auto ob = g6_d5_obstruction(pcs);
        for (int k = 0; k < 3; ++k) {
            out.push_back({"obstruction summand " + std::to_string(k + 1), ob.summands[k], Sign::negative});
        }
        out.push_back({"obstruction total", ob.total, Sign::negative});
    } else if (g == 4) {
        require_decreasing(pcs, 4);
        const double lam = pcs[0], mu = pcs[1], nu = pcs[2], tau = pcs[3];
        out.push_back({"(tau-mu)/(nu-mu)", (tau - mu) / (nu - mu), Sign::positive});
        out.push_back({"(nu-lambda)/(lambda-tau)", (nu - lam) / (lam - tau), Sign::negative});
        out.push_back({"(lambda-nu)/(mu-nu)", (lam - nu) / (mu - nu), Sign::positive});
        out.push_back({"(tau-nu)/(mu-tau)", (tau - nu) / (mu - tau), Sign::negative});
        const double q = (nu - mu) / (nu - tau);
        out.push_back({"1-((nu-mu)/(nu-tau))^2", 1.0 - q * q, Sign::positive});
    } else {
        fail(ErrorKind::Domain, "sign certificates exist for g = 4 and g = 6");
    }
    return out;
}

Obstruction g6_d5_obstruction(const std::vector<double>& pcs) {
    require_decreasing(pcs, 6);
    const double lam = pcs[0], sig = pcs[4], tau = pcs[5];
    Obstruction out;
    for (int k = 0; k < 3; ++k) {
        const double lh = pcs[k + 1];
        out.summands[k] = (lh - tau) * (lam - lh) * (sig - lh);
        out.total += out.summands[k];
    }
    return out;
}

}  // namespace lsg
