#include "lsg/errors.hpp"
#include "lsg/isoparametric.hpp"

#include <doctest.h>

#include <cmath>

using namespace lsg;

namespace {

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

TEST_CASE("admissible multiplicities") {
    CHECK(admissible_multiplicities(4, 1, 6));
    CHECK(admissible_multiplicities(2, 3, 1));
    CHECK_FALSE(admissible_multiplicities(3, 1, 2));
    CHECK_FALSE(admissible_multiplicities(6, 1, 2));
    CHECK_FALSE(admissible_multiplicities(5, 1, 1));
    CHECK_FALSE(admissible_multiplicities(4, 0, 1));
    CHECK_THROWS_AS(IsoparametricFamily(6, 1, 2, 0.0), GeometryError);
    CHECK_THROWS_AS(IsoparametricFamily(4, 1, 1, M_PI / 8), GeometryError);
    CHECK(IsoparametricFamily(4, 2, 3, 0.0).ambient_dim() == 11);
    CHECK(IsoparametricFamily(4, 2, 3, 0.0).multiplicity(3) == 2);
}

TEST_CASE("principal curvatures at the minimal member") {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
    const auto g4 = principal_curvatures(IsoparametricFamily(4, 1, 1, 0.0));
    const double e4[] = {s2 + 1, s2 - 1, -(s2 - 1), -(s2 + 1)};
    for (int i = 0; i < 4; ++i) CHECK(std::abs(g4[i] - e4[i]) < 1e-12);
    const auto g6 = principal_curvatures(IsoparametricFamily(6, 1, 1, 0.0));
    const double e6[] = {2 + s3, 1, 2 - s3, -(2 - s3), -1, -(2 + s3)};
    for (int i = 0; i < 6; ++i) CHECK(std::abs(g6[i] - e6[i]) < 1e-12);
    CHECK(std::abs(principal_curvatures(IsoparametricFamily(1, 1, 1, 0.0))[0]) < 1e-15);
    CHECK(principal_curvatures(IsoparametricFamily(1, 1, 1, -M_PI / 4))[0] == doctest::Approx(1.0));
}

TEST_CASE("mean curvature") {
    CHECK(std::abs(mean_curvature(IsoparametricFamily(4, 1, 1, 0.0))) < 1e-14);
    CHECK(std::abs(mean_curvature(IsoparametricFamily(3, 1, 1, 0.0))) < 1e-14);
    CHECK(std::abs(mean_curvature(IsoparametricFamily(2, 1, 1, 0.0))) < 1e-14);
    for (double th : {-0.3, -0.1, 0.05, 0.2}) {
        const IsoparametricFamily f(4, 2, 5, th / 2);
        CHECK(mean_curvature(f) == doctest::Approx(mean_curvature_direct(f)).epsilon(1e-12));
    }
}

TEST_CASE("mean curvature decreases along the family") {
    for (int g : {1, 2, 3, 4, 6}) {
        const int m2 = (g == 2 || g == 4) ? 3 : 1;
        double prev = INFINITY;
        const double half = M_PI / (2 * g);
        for (int k = 1; k < 100; ++k) {
            const double th = -half + 2 * half * k / 100;
            const double h = mean_curvature(IsoparametricFamily(g, 1, m2, th));
            CHECK(h < prev);
            prev = h;
        }
    }
}

TEST_CASE("minimal theta") {
    CHECK(minimal_theta(4, 2, 2) == doctest::Approx(0.0));
    CHECK(minimal_theta(6, 3, 3) == doctest::Approx(0.0));
    const double th = minimal_theta(4, 1, 4);
    CHECK(th == doctest::Approx(std::atan(0.5) / 2 - M_PI / 8).epsilon(1e-14));
    CHECK(std::abs(mean_curvature(IsoparametricFamily(4, 1, 4, th))) <= 1e-10);
}

TEST_CASE("theta from mean curvature") {
    CHECK(std::abs(theta_from_mean_curvature(4, 1, 1, 0.0)) < 1e-14);
    const double h = mean_curvature(IsoparametricFamily(6, 1, 1, 0.07));
    CHECK(std::abs(theta_from_mean_curvature(6, 1, 1, h) - 0.07) <= 1e-10);
    const double th = theta_from_mean_curvature(3, 2, 2, 10.0);
    CHECK(std::abs(6 * cot(3 * (M_PI / 6 + th)) - 10.0) <= 1e-10);
    CHECK_THROWS_AS(theta_from_mean_curvature(3, 1, 1, NAN), GeometryError);
}

TEST_CASE("scalar curvature") {
    for (double th : {-0.2, 0.0, 0.13}) {
        CHECK(std::abs(scalar_curvature(IsoparametricFamily(6, 1, 1, th / 2)).scalar) < 1e-9);
        CHECK(std::abs(scalar_curvature(IsoparametricFamily(3, 1, 1, th)).scalar) < 1e-9);
    }
    const auto inv = scalar_curvature(IsoparametricFamily(4, 2, 2, 0.0));
    CHECK(inv.scalar == doctest::Approx(32.0));
    CHECK(*inv.scalar_specialized == doctest::Approx(32.0));
    CHECK(inv.n == 9);
    CHECK_FALSE(scalar_curvature(IsoparametricFamily(2, 1, 2, 0.1)).scalar_specialized.has_value());
}

TEST_CASE("focal points and distances") {
    Vector p = Vector::Zero(3), n = Vector::Zero(3);
    p[0] = 1;
    n[1] = 1;
    const auto [f, g] = focal_points(p, n, ProjectiveCurvature::finite(1.0));
    CHECK(f[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(f[1] == doctest::Approx(std::sqrt(0.5)));
    CHECK((f + g).norm() == 0.0);
    CHECK((focal_points(p, n, ProjectiveCurvature::infinite()).first - p).norm() < 1e-15);
    CHECK((focal_points(p, n, ProjectiveCurvature::finite(0.0)).first - n).norm() < 1e-15);
    CHECK_THROWS_AS(focal_points(p, p, ProjectiveCurvature::finite(0.0)), GeometryError);
    CHECK(distance_squared(p, p) == 0.0);
    CHECK(distance_squared(-p, p) == doctest::Approx(M_PI * M_PI));
    CHECK(distance_squared(n, p) == doctest::Approx(M_PI * M_PI / 4));
}
