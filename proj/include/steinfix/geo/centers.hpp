#pragma once

#include "steinfix/geo/isometry.hpp"

namespace steinfix::geo {

struct CircumcenterResult {
    ModelPoint center;
    double radius = 0.0;
    int iterations = 0;
};

/// CAT(0) circumcenter: the unique minimizer of x -> max_i d(x, p_i)^2.
/// A damped subgradient pass (geodesic step 1/(iteration+2) toward the
/// farthest point) provides the warm start; an annealed smooth-max descent
/// then polishes to the stationarity tolerance, which the subgradient's
/// O(1/sqrt(t)) rate cannot reach on its own.
CircumcenterResult circumcenter(const std::vector<ModelPoint>& points,
                                int anneal_rounds = 60, int inner_steps = 80,
                                double stationarity_tol = 1e-9);

/// Weighted barycenter (minimizer of sum w_i d^2(x, p_i)) via the
/// fixed-point iteration x <- exp_x(mean of w_i log_x(p_i)). Exact in one
/// step on the Euclidean model. Throws NumericalFailure at the iteration cap.
ModelPoint barycenter(const std::vector<ModelPoint>& points,
                      std::vector<double> weights = {}, int max_iter = 200,
                      double grad_tol = 1e-9);

/// Orbit of x0 under the listed group elements, deduplicated by distance.
std::vector<ModelPoint> orbit_points(const std::vector<Isometry>& group_elements,
                                     const ModelPoint& x0, double dedup_tol = 1e-9);

/// Fixed point of a finite isometry group: the circumcenter of the orbit of
/// x0, polished by group-averaging (the average over the full element list
/// is exactly equivariant), then verified to move less than fixed_tol under
/// every generator.
ModelPoint cartan_fixed_point(const std::vector<Isometry>& generators,
                              const std::vector<Isometry>& group_elements,
                              const ModelPoint& x0, double fixed_tol = 1e-8);

/// Convenience overload enumerating the group from the generators.
ModelPoint cartan_fixed_point(const std::vector<Isometry>& generators,
                              const ModelPoint& x0, std::size_t cap = 4096,
                              double fixed_tol = 1e-8);

}  // namespace steinfix::geo
