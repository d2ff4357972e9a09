#pragma once

#include "steinfix/geo/isometry.hpp"

namespace steinfix::geo {

/// Totally geodesic subspace of a model manifold. Euclidean: affine set
/// base + span(directions). Hyperboloid: intersection of the sheet with an
/// ambient linear subspace span(basis) that contains a timelike vector; the
/// witness is an on-sheet point of the set.
struct GeodesicSubspace {
    Model model;
    Vec base;        // Euclidean
    Mat directions;  // Euclidean, orthonormal columns (may have 0 columns)
    Mat basis;       // Hyperboloid, ambient x r, Euclidean-orthonormal columns
    ModelPoint witness_point;

    int intrinsic_dim() const;
    const ModelPoint& witness() const { return witness_point; }
};

/// Common fixed set of the given isometries. Throws EmptyFixedSet (naming
/// the least-squares residual) when no common fixed point exists, or when
/// the hyperboloid solution space contains no timelike direction.
GeodesicSubspace fixed_subspace(const std::vector<Isometry>& action, double tol = 1e-8);

/// Whole-manifold subspace (fixed set of the empty action).
GeodesicSubspace full_space(const Model& m);

/// Metric nearest-point projection onto s.
ModelPoint project(const ModelPoint& x, const GeodesicSubspace& s);

double distance_to(const ModelPoint& x, const GeodesicSubspace& s);

bool contains(const GeodesicSubspace& s, const ModelPoint& x, double tol = 1e-8);

/// Projection of a tangent vector at a point of s onto the tangent space
/// of s at that point.
Vec tangent_project(const GeodesicSubspace& s, const ModelPoint& at, const Vec& v);

}  // namespace steinfix::geo
