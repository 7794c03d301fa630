#pragma once

#include "lsg/polygon.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace lsg {

enum class Constraint { cmc, csc, clc };

Constraint parse_constraint(const std::string& name);
const char* to_string(Constraint c);
std::set<Constraint> parse_constraints(const std::string& csv);

struct SearchOptions {
    int m1 = 1;
    int m2 = 1;
    double survivor_tolerance = 1e-6;  // on the unscaled differences H^t - H^1, S^t - S^1, Lie values
    double parallel_tolerance = 1e-6;
    double min_vertex_gap = 1e-3;  // survivors with closer vertices are degenerate
    bool parallel = true;  // evaluate seeds with OpenMP
};

struct Survivor {
    std::size_t seed_index = 0;
    GeodesicPolygon polygon;
    double max_residual = 0.0;
    double parallel_defect = 0.0;
    bool parallel = false;
};

struct SearchResult {
    std::size_t seeds = 0;
    std::size_t converged = 0;  // before deduplication
    std::vector<Survivor> survivors;

    std::size_t non_parallel_count() const;
};

// Normalized constraint residuals of a polygon; empty constraint set gives an empty vector.
std::vector<double> constraint_residuals(const GeodesicPolygon& poly, const std::set<Constraint>& constraints, int m1, int m2);

// Seeds: the first resolution^3 valid points of a seeded low-discrepancy sequence, each polished by
// Levenberg-Marquardt. With clc the odd and even vertex sets are circle-Moebius images of
// regular g-gons; otherwise all vertex positions are free (p^1 fixed at angle 0).
SearchResult constraint_search(int g, const std::set<Constraint>& constraints, int grid_resolution,
                               std::uint64_t seed, const SearchOptions& options = {});

}  // namespace lsg
