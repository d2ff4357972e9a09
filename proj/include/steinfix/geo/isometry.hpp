#pragma once

#include "steinfix/geo/manifold.hpp"

namespace steinfix::geo {

/// Isometry of a model manifold. Euclidean: x -> Q x + b with Q orthogonal.
/// Hyperboloid: x -> L x with L^T J L = J preserving the upper sheet.
struct Isometry {
    Model model;
    Mat linear;  // Q (dim x dim) or L (ambient x ambient)
    Vec offset;  // Euclidean translation; empty for the hyperboloid

    ModelPoint apply(const ModelPoint& x) const;
    Vec apply_tangent(const Vec& v) const { return linear * v; }
    /// this after other: (this*other)(x) = this(other(x)).
    Isometry compose(const Isometry& other) const;
    Isometry inverse() const;
    bool is_identity(double tol = 1e-12) const;
    /// Max deviation from the isometry constraint; throws above tol.
    double validate(double tol = 1e-10) const;
    /// Entrywise distance between the matrix data of two isometries.
    double data_distance(const Isometry& o) const;
};

Isometry identity_isometry(const Model& m);
Isometry euclidean_isometry(Mat rotation, Vec translation);
/// Rotation by theta in the coordinate plane (axis_i, axis_j) about center.
Isometry euclidean_rotation(int dim, int axis_i, int axis_j, double theta, const Vec& center);
/// Reflection across the affine hyperplane through `anchor` with the given
/// (not necessarily unit) normal.
Isometry euclidean_reflection(const Vec& normal, const Vec& anchor);

Isometry hyperboloid_isometry(const Model& m, Mat linear);
/// Rotation by theta in spatial coordinates (i, j), 1-based among the
/// spatial axes; fixes the base point.
Isometry hyperboloid_rotation(const Model& m, int axis_i, int axis_j, double theta);
/// Translation by the given distance along the geodesic from the base point
/// in spatial direction `axis` (1-based).
Isometry hyperboloid_boost(const Model& m, int axis, double distance);
/// Reflection negating spatial axis (1-based); fixes the complementary
/// geodesic hyperplane through the base point.
Isometry hyperboloid_reflection(const Model& m, int axis);

/// All elements of the generated group, BFS order with tolerance dedup.
/// Throws CapExceeded when the closure grows past cap.
std::vector<Isometry> isometry_closure(const std::vector<Isometry>& generators,
                                       std::size_t cap = 4096, double tol = 1e-8);

}  // namespace steinfix::geo
