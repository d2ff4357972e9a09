#pragma once

#include <Eigen/Dense>

#include "steinfix/common.hpp"

namespace steinfix::geo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Model Hadamard manifold: flat Euclidean space or the hyperboloid sheet
///   { x : <x,x>_J = -1/c^2, x_0 > 0 },  <x,y>_J = -x_0 y_0 + sum_i x_i y_i
/// of constant sectional curvature -c^2, embedded in Minkowski space.
struct Model {
    enum class Kind { Euclidean, Hyperboloid };

    Kind kind = Kind::Euclidean;
    int dim = 0;           // manifold dimension
    double curvature = 0;  // c > 0 (hyperboloid only)

    int ambient_dim() const { return kind == Kind::Euclidean ? dim : dim + 1; }
    bool operator==(const Model& o) const {
        return kind == o.kind && dim == o.dim &&
               (kind == Kind::Euclidean || curvature == o.curvature);
    }
    bool operator!=(const Model& o) const { return !(*this == o); }
};

Model euclidean(int dim);
Model hyperboloid(int dim, double curvature_scale);

struct ModelPoint {
    Model model;
    Vec coords;
};

/// Minkowski form -a0 b0 + sum_{i>=1} a_i b_i.
double minkowski_dot(const Vec& a, const Vec& b);

/// Base point of the sheet: (1/c, 0, ..., 0).
ModelPoint base_point(const Model& m);
/// Euclidean origin resp. the sheet base point.
ModelPoint origin(const Model& m);

/// Throws ParameterError unless the hyperboloid constraint holds to tol.
void check_point(const ModelPoint& x, double tol = 1e-10);
void check_same_model(const ModelPoint& x, const ModelPoint& y);

double dist(const ModelPoint& x, const ModelPoint& y);

/// Tangent vectors are ambient vectors; on the hyperboloid they satisfy
/// <x, v>_J = 0 (enforced by projection on entry to exp_map).
Vec log_map(const ModelPoint& x, const ModelPoint& y);
ModelPoint exp_map(const ModelPoint& x, const Vec& v);
double tangent_dot(const ModelPoint& x, const Vec& u, const Vec& w);
double tangent_norm(const ModelPoint& x, const Vec& v);

/// Angle at x of the geodesic triangle (x, y, z). Throws on degenerate legs.
double angle_at(const ModelPoint& x, const ModelPoint& y, const ModelPoint& z);

ModelPoint geodesic_point(const ModelPoint& x, const ModelPoint& y, double t);
ModelPoint midpoint(const ModelPoint& x, const ModelPoint& y);

/// Slack of the CAT(0) midpoint inequality,
///   1/2 d^2(x,y) + 1/2 d^2(x,z) - 1/4 d^2(y,z) - d^2(x, m(y,z)),
/// nonnegative in these models and identically zero in the flat one.
double cat0_defect(const ModelPoint& x, const ModelPoint& y, const ModelPoint& z);

/// Euclidean comparison angle opposite side c via the law of cosines.
/// Throws if (a,b,c) violates the triangle inequality.
double comparison_angle(double a, double b, double c);

/// Normalized midpoint defect of the probe triangle measured in the
/// rescaled metric lambda*d, i.e. of the congruent triangle (same side
/// lengths and apex angle) realized at curvature scale c/lambda, divided
/// by the squared diameter. Decreasing in lambda; identically ~0 for
/// Euclidean probes.
double flatness_defect(double lambda, const ModelPoint& x, const ModelPoint& y,
                       const ModelPoint& z);

}  // namespace steinfix::geo
