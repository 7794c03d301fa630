#include "lsg/search.hpp"

#include "lsg/errors.hpp"
#include "lsg/isoparametric.hpp"

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

namespace lsg {

Constraint parse_constraint(const std::string& name) {
    if (name == "cmc") return Constraint::cmc;
    if (name == "csc") return Constraint::csc;
    if (name == "clc") return Constraint::clc;
    fail(ErrorKind::Usage, "unknown constraint '" + name + "'");
}

const char* to_string(Constraint c) {
    switch (c) {
        case Constraint::cmc: return "cmc";
        case Constraint::csc: return "csc";
        case Constraint::clc: return "clc";
    }
    return "?";
}

std::set<Constraint> parse_constraints(const std::string& csv) {
    std::set<Constraint> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.insert(parse_constraint(item));
    }
    return out;
}

std::size_t SearchResult::non_parallel_count() const {
    return static_cast<std::size_t>(std::count_if(survivors.begin(), survivors.end(), [](const Survivor& s) { return !s.parallel; }));
}

namespace {

int dimension_of(int g, int m1, int m2) {
    int n = 1;
    for (int i = 1; i <= g; ++i) n += (i % 2 == 1) ? m1 : m2;
    return n;
}

std::vector<double> regular_clc_values(int g) {
    std::vector<double> out;
    const GeodesicPolygon reg = build_parallel_polygon(g, 0.0);
    for (const auto& p : clc_patterns(g)) out.push_back(polygon_lie_curvature(reg, 1, p).value);
    return out;
}

// Scaled by 1 + |H^1| and 1 + |S^1| for the polish; `scaled = false` gives the raw differences.
std::vector<double> residuals_with(const GeodesicPolygon& poly, const std::set<Constraint>& constraints, int m1, int m2,
                                   const std::vector<double>& clc_targets, bool scaled = true) {
    const int g = poly.g();
    const int n = dimension_of(g, m1, m2);
    std::vector<double> h(poly.vertex_count()), s(poly.vertex_count());
    for (int t = 1; t <= poly.vertex_count(); ++t) {
        double mean = 0.0, norm = 0.0;
        for (int i = 1; i <= g; ++i) {
            const int m = (i % 2 == 1) ? m1 : m2;
            const double k = poly.curvature(t, i);
            mean += m * k;
            norm += m * k * k;
        }
        h[t - 1] = mean;
        s[t - 1] = (n - 1.0) * (n - 2.0) + mean * mean - norm;
    }
    std::vector<double> r;
    if (constraints.count(Constraint::cmc)) {
        for (int t = 2; t <= poly.vertex_count(); ++t) r.push_back((h[t - 1] - h[0]) / (scaled ? 1.0 + std::abs(h[0]) : 1.0));
    }
    if (constraints.count(Constraint::csc)) {
        for (int t = 2; t <= poly.vertex_count(); ++t) r.push_back((s[t - 1] - s[0]) / (scaled ? 1.0 + std::abs(s[0]) : 1.0));
    }
    if (constraints.count(Constraint::clc)) {
        const auto patterns = clc_patterns(g);
        for (int t = 1; t <= poly.vertex_count(); ++t) {
            for (std::size_t k = 0; k < patterns.size(); ++k) {
                r.push_back(polygon_lie_curvature(poly, t, patterns[k]).value - clc_targets[k]);
            }
        }
    }
    return r;
}

// Circle map sending the triple `from` to the triple `to`, both on the unit circle.
Complex three_point_map(const std::array<Complex, 3>& from, const std::array<Complex, 3>& to, Complex z) {
    if (std::abs(z - from[2]) < 1e-15) return to[2];
    const Complex s = (z - from[0]) * (from[1] - from[2]) / ((z - from[2]) * (from[1] - from[0]));
    const Complex b = to[1] - to[0], a = to[1] - to[2];
    return (s * b * to[2] - a * to[0]) / (s * b - a);
}

double unit_angle(Complex z) {
    double a = std::atan2(z.imag(), z.real());
    if (a < 0) a += 2 * M_PI;
    if (a >= 2 * M_PI) a = 0.0;
    return a;
}

// Maps parameters to vertex angles, or nothing if the configuration is not a valid polygon.
// With moebius set the parameters are the angles of p^2..p^6; they fix the circle maps carrying
// the regular odd and even g-gons onto the vertex sets.
class Parametrization {
public:
    Parametrization(int g, bool moebius) : g_(g), moebius_(moebius) {}

    int size() const { return moebius_ ? 5 : 2 * g_ - 1; }

    std::optional<std::vector<double>> angles(const Eigen::VectorXd& x) const {
        std::vector<double> phi(2 * g_);
        phi[0] = 0.0;
        if (moebius_) {
            std::array<double, 6> lead{0.0, x[0], x[1], x[2], x[3], x[4]};
            for (int k = 1; k < 6; ++k) {
                if (!(lead[k] - lead[k - 1] > 1e-6)) return std::nullopt;
            }
            if (!(lead[5] < 2 * M_PI - 1e-6)) return std::nullopt;
            for (int parity = 0; parity < 2; ++parity) {
                const double offset = parity * M_PI / g_;
                std::array<Complex, 3> from, to;
                for (int k = 0; k < 3; ++k) {
                    from[k] = std::polar(1.0, 2 * M_PI * k / g_ + offset);
                    to[k] = std::polar(1.0, lead[2 * k + parity]);
                }
                for (int k = 0; k < g_; ++k) {
                    const int t = 2 * k + parity;
                    phi[t] = k < 3 ? lead[t] : unit_angle(three_point_map(from, to, std::polar(1.0, 2 * M_PI * k / g_ + offset)));
                }
            }
        } else {
            for (int k = 1; k < 2 * g_; ++k) phi[k] = x[k - 1];
        }
        for (int k = 1; k < 2 * g_; ++k) {
            if (!(phi[k] - phi[k - 1] > 1e-6)) return std::nullopt;
        }
        if (!(phi.back() < 2 * M_PI - 1e-6)) return std::nullopt;
        return phi;
    }

    Eigen::VectorXd seed_point(const std::vector<double>& u) const {
        Eigen::VectorXd x(size());
        std::vector<double> s(u.begin(), u.end());
        std::sort(s.begin(), s.end());
        const double span = moebius_ ? 2 * M_PI * std::min(1.0, 6.5 / (2 * g_)) : 2 * M_PI;
        for (int k = 0; k < size(); ++k) x[k] = span * s[k];
        return x;
    }

private:
    int g_;
    bool moebius_;
};

struct ResidualFunctor {
    using Scalar = double;
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

    const Parametrization* param;
    const std::set<Constraint>* constraints;
    int g, m1, m2;
    const std::vector<double>* targets;
    int values_count;

    int inputs() const { return param->size(); }
    int values() const { return values_count; }

    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
        f.setConstant(values_count, 0.0);
        const auto phi = param->angles(x);
        if (!phi) {
            f.setConstant(10.0);
            return 0;
        }
        try {
            const auto poly = GeodesicPolygon::from_vertex_angles(g, *phi);
            const auto r = residuals_with(poly, *constraints, m1, m2, *targets);
            for (std::size_t k = 0; k < r.size(); ++k) f[static_cast<Eigen::Index>(k)] = r[k];
        } catch (const GeometryError&) {
            f.setConstant(10.0);
        }
        return 0;
    }
};

// Additive recurrence with the generalized golden ratio of the dimension, shifted by a seeded offset.
std::vector<double> lattice_point(std::size_t index, int dim, const std::vector<double>& shift) {
    double phi = 2.0;
    for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1));
    std::vector<double> u(dim);
    double alpha = 1.0;
    for (int k = 0; k < dim; ++k) {
        alpha /= phi;
        const double v = shift[k] + alpha * static_cast<double>(index + 1);
        u[k] = v - std::floor(v);
    }
    return u;
}

}  // namespace

std::vector<double> constraint_residuals(const GeodesicPolygon& poly, const std::set<Constraint>& constraints, int m1, int m2) {
    const auto targets = constraints.count(Constraint::clc) ? regular_clc_values(poly.g()) : std::vector<double>{};
    return residuals_with(poly, constraints, m1, m2, targets);
}

SearchResult constraint_search(int g, const std::set<Constraint>& constraints, int grid_resolution, std::uint64_t seed,
                               const SearchOptions& options) {
    if (g != 3 && g != 4 && g != 6) fail(ErrorKind::Domain, "search needs g in {3, 4, 6}");
    if (grid_resolution < 1 || grid_resolution > 60) fail(ErrorKind::Domain, "grid resolution must lie in 1..60");
    if (!admissible_multiplicities(g, options.m1, options.m2)) fail(ErrorKind::Domain, "inadmissible multiplicities");

    const bool moebius = constraints.count(Constraint::clc) > 0;
    const Parametrization param(g, moebius);
    const auto targets = moebius ? regular_clc_values(g) : std::vector<double>{};
    const auto probe = residuals_with(build_parallel_polygon(g, 0.0), constraints, options.m1, options.m2, targets);
    const int values_count = std::max<int>(static_cast<int>(probe.size()), param.size());

    const std::size_t count = static_cast<std::size_t>(grid_resolution) * grid_resolution * grid_resolution;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> shift(param.size());
    for (auto& s : shift) s = unif(rng);

    // Valid seeds are taken in index order from the first 64 * count sequence points.
    const std::size_t candidates = 64 * count;
    std::vector<Eigen::VectorXd> seeds;
    seeds.reserve(count);
    for (std::size_t i = 0; i < candidates && seeds.size() < count; ++i) {
        Eigen::VectorXd x = param.seed_point(lattice_point(i, param.size(), shift));
        if (param.angles(x)) seeds.push_back(std::move(x));
    }

    std::vector<std::optional<Survivor>> slots(seeds.size());
    const auto evaluate = [&](std::size_t index) {
        Eigen::VectorXd x = seeds[index];
        ResidualFunctor functor{&param, &constraints, g, options.m1, options.m2, &targets, values_count};
        Eigen::NumericalDiff<ResidualFunctor> numeric(functor);
        Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ResidualFunctor>> lm(numeric);
        lm.parameters.ftol = 1e-15;
        lm.parameters.xtol = 1e-15;
        lm.parameters.maxfev = 400 * (param.size() + 1);
        lm.minimize(x);
        const auto phi = param.angles(x);
        if (!phi) return;
        for (std::size_t k = 0; k < phi->size(); ++k) {
            const double next = (k + 1 < phi->size()) ? (*phi)[k + 1] : (*phi)[0] + 2 * M_PI;
            if (next - (*phi)[k] < options.min_vertex_gap) return;
        }
        try {
            auto poly = GeodesicPolygon::from_vertex_angles(g, *phi);
            const auto r = residuals_with(poly, constraints, options.m1, options.m2, targets, false);
            double worst = 0.0;
            for (double v : r) worst = std::max(worst, std::abs(v));
            if (!(worst <= options.survivor_tolerance)) return;
            const double defect = parallel_defect(poly);
            slots[index] = Survivor{index, std::move(poly), worst, defect, defect <= options.parallel_tolerance};
        } catch (const GeometryError&) {
        }
    };

    if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(seeds.size()); ++i) evaluate(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < seeds.size(); ++i) evaluate(i);
    }

    SearchResult out;
    out.seeds = seeds.size();
    for (auto& slot : slots) {
        if (!slot) continue;
        ++out.converged;
        const auto& a = slot->polygon.vertex_angles();
        const bool duplicate = std::any_of(out.survivors.begin(), out.survivors.end(), [&](const Survivor& s) {
            const auto& b = s.polygon.vertex_angles();
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (std::abs(std::remainder(a[k] - b[k], 2 * M_PI)) > 1e-6) return false;
            }
            return true;
        });
        if (!duplicate) out.survivors.push_back(std::move(*slot));
    }
    return out;
}

}  // namespace lsg
