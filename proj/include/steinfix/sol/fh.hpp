#pragma once

#include "steinfix/sol/scenario.hpp"

namespace steinfix::sol {

struct AffineMinimizeResult {
    geo::Vec minimizer;
    double value = 0.0;
};

/// Exact minimizer of x -> sum_{pairs} d^2(x, Fix_{i,j}) over Euclidean
/// space: the residual map x -> (x - proj_{1,2} x, x - proj_{1,3} x,
/// x - proj_{2,3} x) is affine, and the least-norm point of its image is
/// found by linear least squares.
AffineMinimizeResult fh_affine_minimize(const std::array<geo::GeodesicSubspace, 3>& fixed_sets);

/// Overload computing the fixed sets from three orthogonal-affine actions.
AffineMinimizeResult fh_affine_minimize(
    const std::array<std::vector<geo::Isometry>, 3>& actions);

struct BarycenterInequalityRecord {
    std::array<double, 3> vertex_d_sq{0, 0, 0};   // d^2(q, vertex)
    std::array<double, 3> segment_d_sq{0, 0, 0};  // d^2(q, opposite segment)
    double min_slack = 0.0;
    bool ok = true;
};

/// The median inequality at the barycenter q = (x+y+z)/3 of a Euclidean
/// triangle: d^2(q, v) >= 4 d^2(q, opposite segment) for every vertex v.
BarycenterInequalityRecord barycenter_inequality_check(const geo::Vec& x, const geo::Vec& y,
                                                       const geo::Vec& z);

}  // namespace steinfix::sol
