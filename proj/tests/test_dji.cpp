#include "lsg/dji.hpp"
#include "lsg/errors.hpp"
#include "lsg/isoparametric.hpp"
#include "lsg/polygon.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

using namespace lsg;

namespace {

std::vector<double> pcs(int g, double theta, int m1 = 1, int m2 = 1) {
    return principal_curvatures(IsoparametricFamily(g, m1, m2, theta));
}

double value_of(const std::vector<SignCertificate>& certs, const std::string& name) {
    for (const auto& c : certs)
        if (c.name == name) return c.expression_value;
    FAIL("missing certificate " << name);
    return NAN;
}

}  // namespace

TEST_CASE("recover the remaining curvature pair") {
    const double s = std::sqrt(2.0);
    const auto [mu, tau] = recover_pair(s + 1, -(s - 1), 0.0, 1, 1);
    CHECK(mu == doctest::Approx(s - 1).epsilon(1e-14));
    CHECK(tau == doctest::Approx(-(s + 1)).epsilon(1e-14));
    const auto q = curvature_quadratic(s + 1, -(s - 1), 0.0, 1, 1);
    CHECK(q.a == doctest::Approx(-2.0));
    CHECK(q.b == doctest::Approx(-1.0));

    for (int m1 : {1, 2, 3}) {
        for (int m2 : {1, 4}) {
            for (int k = 0; k < 21; ++k) {
                const double th = -M_PI / 8 + M_PI / 4 * (k + 0.5) / 21;
                const auto poly = build_parallel_polygon(4, th);
                for (int t = 1; t <= 8; ++t) {
                    double h = 0;
                    for (int i = 1; i <= 4; ++i) h += ((i % 2 == 1) ? m1 : m2) * poly.curvature(t, i);
                    const auto [m, ta] = recover_pair(poly.curvature(t, 1), poly.curvature(t, 3), h, m1, m2);
                    CHECK(std::abs(m - poly.curvature(t, 2)) < 1e-10 * std::max(1.0, std::abs(m)));
                    CHECK(std::abs(ta - poly.curvature(t, 4)) < 1e-10 * std::max(1.0, std::abs(ta)));
                }
            }
        }
    }
}

TEST_CASE("recover_pair rejects inconsistent data") {
    try {
        recover_pair(3, 1, 9, 1, 1);
        FAIL("expected an error");
    } catch (const GeometryError& e) {
        CHECK(e.kind() == ErrorKind::InconsistentData);
        CHECK(curvature_quadratic(3, 1, 9, 1, 1).discriminant() < 0);
    }
    try {
        recover_pair(1, -1, 3, 1, 1);
        FAIL("expected an error");
    } catch (const GeometryError& e) {
        CHECK(e.kind() == ErrorKind::InconsistentData);
    }
    // Nearly equal lambda and nu still interlace at H = 0.
    const auto [mu, tau] = recover_pair(1, 0.9, 0, 1, 1);
    CHECK(mu < 1.0);
    CHECK(mu > 0.9);
    CHECK(tau < 0.9);
    CHECK_THROWS_AS(recover_pair(0, 1, 0, 1, 1), GeometryError);
}

TEST_CASE("system assembly") {
    const auto p4 = pcs(4, 0.0);
    const auto sys = build_system(4, p4, 2, 3, g4_cmc_csc(), critical_pinning(4));
    CHECK(sys.labels.size() == 8);
    CHECK(sys.rows.rows() == 8);
    // Row j = 2 of the CMC block reads m1 d23 + m2 d24 = 0 once d21 is pinned.
    const int c23 = sys.column({2, 3}), c24 = sys.column({2, 4});
    bool found = false;
    for (Eigen::Index r = 0; r < sys.rows.rows(); ++r) {
        if (sys.rows(r, c23) == 2.0 && sys.rows(r, c24) == 3.0 && sys.rows.row(r).cwiseAbs().sum() == 5.0) found = true;
    }
    CHECK(found);
    CHECK(sys.column({2, 1}) == -1);
    CHECK(sys.column({1, 2}) == -1);

    const auto empty = build_system(4, p4, 1, 1, SystemConstraints{}, {});
    CHECK(empty.rows.rows() == 0);
    CHECK(empty.labels.size() == 12);
    const auto ka = kernel_analysis(empty);
    CHECK(ka.kernel_dimension == 12);

    CHECK_THROWS_AS(build_system(4, {1, 1, 0, -1}, 1, 1, g4_cmc_csc(), {}), GeometryError);
    CHECK_THROWS_AS(build_system(4, {1, 2, 0, -1}, 1, 1, g4_cmc_csc(), {}), GeometryError);
    CHECK_THROWS_AS(build_system(4, {3, 2, 1}, 1, 1, g4_cmc_csc(), {}), GeometryError);
}

TEST_CASE("lie rows are gradients of the log cross ratio") {
    const auto p6 = pcs(6, 0.03);
    SystemConstraints c;
    c.lie = {{1, 2, 3, 5}};
    const auto sys = build_system(6, p6, 1, 1, c, {});
    const auto phi = [](const std::vector<double>& l) { return std::log(std::abs((l[0] - l[1]) * (l[2] - l[4]) / ((l[0] - l[4]) * (l[2] - l[1])))); };
    const int j = 4;
    for (int i = 1; i <= 6; ++i) {
        if (i == j) continue;
        auto up = p6, dn = p6;
        up[i - 1] += 1e-6;
        dn[i - 1] -= 1e-6;
        const double fd = (phi(up) - phi(dn)) / 2e-6;
        CHECK(sys.rows(j - 1, sys.column({j, i})) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("trivial kernels at family curvatures") {
    for (double th : {-0.2, 0.0, 0.1}) {
        for (const auto& [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 5}}) {
            CHECK(kernel_analysis(build_system(4, pcs(4, th), m1, m2, g4_cmc_csc(), critical_pinning(4))).kernel_dimension == 0);
            CHECK(kernel_analysis(build_system(4, pcs(4, th), m1, m2, g4_cmc_lie(), g4_lie_pinning())).kernel_dimension == 0);
        }
        const auto sys6 = build_system(6, pcs(6, th / 2), 1, 1, g6_cmc_lie(false), critical_pinning(6));
        CHECK(sys6.labels.size() == 24);
        CHECK(kernel_analysis(sys6).kernel_dimension == 0);
        CHECK(kernel_analysis(build_system(6, pcs(6, th / 2), 1, 1, g6_cmc_lie(true), critical_pinning(6))).kernel_dimension == 0);
    }
    SystemConstraints cmc;
    cmc.cmc = true;
    CHECK(kernel_analysis(build_system(6, pcs(6, 0.0), 1, 1, cmc, {})).kernel_dimension == 24);
    CHECK(kernel_analysis(build_system(6, pcs(6, 0.0), 1, 1, cmc, critical_pinning(6))).kernel_dimension == 18);
    const auto cmc4 = kernel_analysis(build_system(4, pcs(4, 0.0), 1, 1, cmc, critical_pinning(4)));
    CHECK(cmc4.kernel_dimension == 4);
    CHECK(cmc4.basis.cols() == 4);
}

TEST_CASE("kernel dimension is stable under small perturbations") {
    auto p = pcs(6, 0.0);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1e-8, 1e-8);
    for (auto& x : p) x += u(rng);
    const auto ka = kernel_analysis(build_system(6, p, 1, 1, g6_cmc_lie(true), critical_pinning(6)));
    CHECK(ka.kernel_dimension == 0);
    CHECK(ka.warnings.empty());
}

TEST_CASE("single-unknown perturbations are detected") {
    const auto sys = build_system(4, pcs(4, 0.0), 1, 1, g4_cmc_csc(), critical_pinning(4));
    double min_nonzero = INFINITY;
    for (Eigen::Index r = 0; r < sys.rows.rows(); ++r)
        for (Eigen::Index c = 0; c < sys.rows.cols(); ++c)
            if (sys.rows(r, c) != 0.0) min_nonzero = std::min(min_nonzero, std::abs(sys.rows(r, c)));
    for (Eigen::Index c = 0; c < sys.rows.cols(); ++c) {
        Vector d = Vector::Zero(sys.rows.cols());
        d[c] = 1e-6;
        CHECK((sys.rows * d).cwiseAbs().maxCoeff() >= 1e-6 * min_nonzero * (1 - 1e-12));
    }
}

TEST_CASE("g6 sign certificates") {
    const auto p = pcs(6, 0.0);
    const auto certs = sign_certificates(6, p);
    for (const auto& c : certs) {
        CHECK_MESSAGE(c.holds(1e-6), c.name);
    }
    const double s3 = std::sqrt(3.0);
    CHECK(value_of(certs, "1-v3/w3-v4/w4-v6/w6") == doctest::Approx(9 - 2 * s3).epsilon(1e-12));
    CHECK(value_of(certs, "d3 coefficient - 5") > 0);
    CHECK(value_of(certs, "d4 coefficient") < 0);
    CHECK(value_of(certs, "(lambda-rho)(nu-mu)/((lambda-mu)(nu-rho))") == doctest::Approx(-2.0));
    CHECK(value_of(certs, "(lambda-rho)(nu-sigma)/((lambda-sigma)(nu-rho))") == doctest::Approx(2.0));
    CHECK(value_of(certs, "(lambda-rho)(nu-tau)/((lambda-tau)(nu-rho))") == doctest::Approx(4.0));
    CHECK(value_of(certs, "(lambda-nu)(rho-mu)/((lambda-mu)(rho-nu))") == doctest::Approx(3.0));
    CHECK(value_of(certs, "(lambda-nu)(rho-sigma)/((lambda-sigma)(rho-nu))") == doctest::Approx(-1.0));
    CHECK(value_of(certs, "(lambda-nu)(rho-tau)/((lambda-tau)(rho-nu))") == doctest::Approx(-3.0));
    const auto c3 = phi_coefficients(p, 3);
    CHECK(c3.v == doctest::Approx(-1 / s3));
    CHECK(c3.w == doctest::Approx(1 + 2 / s3));
}

TEST_CASE("g4 sign certificates") {
    for (int k = 0; k < 15; ++k) {
        const double th = -M_PI / 8 + M_PI / 4 * (k + 0.5) / 15;
        for (const auto& c : sign_certificates(4, pcs(4, th))) CHECK_MESSAGE(c.holds(1e-6), c.name);
    }
    CHECK_THROWS_AS(sign_certificates(3, pcs(3, 0.0)), GeometryError);
}

TEST_CASE("d5 obstruction") {
    const auto ob = g6_d5_obstruction(pcs(6, 0.0));
    CHECK(ob.total == doctest::Approx(-12 - 24 * std::sqrt(3.0)).epsilon(1e-13));
    for (double v : ob.summands) CHECK(v < 0);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-50, 50);
    for (int k = 0; k < 10000; ++k) {
        std::vector<double> p(6);
        for (auto& x : p) x = u(rng);
        std::sort(p.begin(), p.end(), std::greater<>());
        CHECK(g6_d5_obstruction(p).total < 0);
    }
}
