#pragma once

#include <random>

#include "steinfix/sol/scenario.hpp"

namespace steinfix::sol {

struct TriangleState {
    geo::ModelPoint x, y, z;  // on X^{G_{1,2}}, X^{G_{1,3}}, X^{G_{2,3}}
    double f_value = 0.0;
    std::array<double, 3> vertex_angles{0, 0, 0};  // NaN when unavailable
    int iteration = 0;
};

struct MonitorRecord {
    enum class Kind { Ttt, HBound, GoodPoint };
    Kind kind = Kind::Ttt;
    int iteration = -1;
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = true;
};

struct VertexCertificate {
    bool available = false;
    std::array<double, 3> angles{0, 0, 0};
    double angle_sum = 0.0;
    bool fat = false;  // all three angles strictly above pi/3
};

struct SolverResult {
    enum class Status { FixedPoint, MinimalTriangle, IterationCap };
    Status status = Status::IterationCap;
    TriangleState final_state;
    std::optional<geo::ModelPoint> fixed_point;
    VertexCertificate certificate;
    std::vector<MonitorRecord> monitors;
    std::vector<double> f_trace;
    int iterations = 0;
};

/// Sum of squared side lengths d^2(x,y) + d^2(y,z) + d^2(z,x).
double energy_f(const geo::ModelPoint& x, const geo::ModelPoint& y, const geo::ModelPoint& z);

/// Sum over the three pairwise groups of the squared distance from x to
/// their fixed sets.
double energy_h(const Scenario& s, const geo::ModelPoint& x);

/// Maximal displacement of x over the symmetric set K.
double diam_k(const Scenario& s, const geo::ModelPoint& x);

/// Checks h(x) >= diam(K x)^2 / 4 (must never flag a violation).
MonitorRecord monitor_ttt(const Scenario& s, const geo::ModelPoint& x, int iteration = -1);

/// Checks h(x) <= 3 diam(K x)^2 (must never flag a violation).
MonitorRecord monitor_h_bound(const Scenario& s, const geo::ModelPoint& x, int iteration = -1);

/// Searches (the three per-pair orbit circumcenters plus seeded sampling
/// around x) for y with diam(K y) <= diam(K x) / 5. When found, records the
/// halving check h(y) <= h(x)/2 and the h <= 3 diam^2 bound at y, and
/// returns (y, true); otherwise returns (x, false).
std::pair<geo::ModelPoint, bool> good_point_step(const Scenario& s, const geo::ModelPoint& x,
                                                 std::mt19937_64& rng,
                                                 std::vector<MonitorRecord>* sink = nullptr,
                                                 int iteration = -1);

/// Angle certificate of a triangle state; unavailable when a side is
/// degenerate (below 1e-10).
VertexCertificate vertex_angle_certificate(const TriangleState& st);

/// Block-coordinate descent on f over the product of the three fixed sets:
/// Euclidean vertex updates are the exact projection of the midpoint of the
/// other two vertices; hyperboloid updates run projected Riemannian
/// gradient descent with Armijo backtracking inside the fixed set. On
/// f <= tol the barycenter of the triangle is re-centered through
/// cartan_fixed_point and returned as the certified fixed point.
SolverResult minimize_f(const Scenario& s);

}  // namespace steinfix::sol
