#include "lsg/errors.hpp"
#include "lsg/search.hpp"

#include <doctest.h>

#include <cmath>

using namespace lsg;

TEST_CASE("constraint parsing") {
    const auto c = parse_constraints("cmc,clc");
    CHECK(c.size() == 2);
    CHECK(c.count(Constraint::clc) == 1);
    CHECK(parse_constraints("").empty());
    CHECK_THROWS_AS(parse_constraints("cmc,foo"), GeometryError);
}

TEST_CASE("residuals vanish on parallel polygons") {
    for (int g : {3, 4, 6}) {
        const auto r = constraint_residuals(build_parallel_polygon(g, 0.1 / g), {Constraint::cmc, Constraint::csc, Constraint::clc}, 1, 1);
        for (double v : r) CHECK(std::abs(v) < 1e-10);
    }
    CHECK(constraint_residuals(build_parallel_polygon(4, 0.0), {}, 1, 1).empty());
    const auto skew = GeodesicPolygon::from_vertex_angles(4, {0.0, 0.5, 1.1, 1.9, 2.6, 3.5, 4.4, 5.5});
    double worst = 0;
    for (double v : constraint_residuals(skew, {Constraint::cmc}, 1, 1)) worst = std::max(worst, std::abs(v));
    CHECK(worst > 1e-3);
}

TEST_CASE("search input validation") {
    CHECK_THROWS_AS(constraint_search(5, {Constraint::cmc}, 4, 0), GeometryError);
    CHECK_THROWS_AS(constraint_search(4, {Constraint::cmc}, 61, 0), GeometryError);
    SearchOptions bad;
    bad.m1 = 1;
    bad.m2 = 2;
    CHECK_THROWS_AS(constraint_search(6, {Constraint::cmc}, 4, 0, bad), GeometryError);
}

TEST_CASE("small searches return parallel survivors") {
    const auto a = constraint_search(3, {Constraint::cmc}, 6, 1);
    CHECK(a.seeds == 216);
    CHECK(!a.survivors.empty());
    CHECK(a.non_parallel_count() == 0);
    const auto b = constraint_search(4, {Constraint::cmc, Constraint::clc}, 6, 1);
    CHECK(b.non_parallel_count() == 0);
    for (const auto& s : b.survivors) CHECK(s.max_residual <= 1e-6);
}

TEST_CASE("serial and parallel searches agree") {
    SearchOptions serial;
    serial.parallel = false;
    const auto a = constraint_search(4, {Constraint::cmc, Constraint::csc}, 5, 9, serial);
    const auto b = constraint_search(4, {Constraint::cmc, Constraint::csc}, 5, 9);
    REQUIRE(a.survivors.size() == b.survivors.size());
    CHECK(a.converged == b.converged);
    for (std::size_t k = 0; k < a.survivors.size(); ++k) {
        CHECK(a.survivors[k].seed_index == b.survivors[k].seed_index);
        CHECK(a.survivors[k].polygon.vertex_angles() == b.survivors[k].polygon.vertex_angles());
    }
    const auto c = constraint_search(4, {Constraint::cmc, Constraint::csc}, 5, 10);
    CHECK(c.survivors.size() > 0);
}
