#include "steinfix/geo/manifold.hpp"

#include <algorithm>
#include <cmath>

namespace steinfix::geo {

Model euclidean(int dim) {
    if (dim < 1) throw ParameterError("euclidean model needs dim >= 1");
    return Model{Model::Kind::Euclidean, dim, 0.0};
}

Model hyperboloid(int dim, double curvature_scale) {
    if (dim < 1) throw ParameterError("hyperboloid model needs dim >= 1");
    if (!(curvature_scale > 0)) throw ParameterError("curvature scale must be positive");
    return Model{Model::Kind::Hyperboloid, dim, curvature_scale};
}

double minkowski_dot(const Vec& a, const Vec& b) {
    double s = -a(0) * b(0);
    for (int i = 1; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

ModelPoint base_point(const Model& m) {
    if (m.kind != Model::Kind::Hyperboloid)
        throw ParameterError("base_point is a hyperboloid notion");
    Vec x = Vec::Zero(m.ambient_dim());
    x(0) = 1.0 / m.curvature;
    return {m, x};
}

ModelPoint origin(const Model& m) {
    if (m.kind == Model::Kind::Euclidean) return {m, Vec::Zero(m.dim)};
    return base_point(m);
}

void check_point(const ModelPoint& x, double tol) {
    if (x.coords.size() != x.model.ambient_dim())
        throw ParameterError("point has wrong ambient dimension");
    if (x.model.kind == Model::Kind::Hyperboloid) {
        double c = x.model.curvature;
        double residual = std::abs(minkowski_dot(x.coords, x.coords) + 1.0 / (c * c));
        if (residual > tol * std::max(1.0, 1.0 / (c * c)) || x.coords(0) <= 0)
            throw ParameterError("point is not on the upper hyperboloid sheet");
    }
}

void check_same_model(const ModelPoint& x, const ModelPoint& y) {
    if (x.model != y.model) throw ParameterError("points live in different models");
}

namespace {

/// Rescale back onto the sheet; compositions of isometries and exp steps
/// drift at the 1e-15 level and this keeps the constraint exact.
ModelPoint renormalized(const Model& m, Vec coords) {
    double c = m.curvature;
    double q = minkowski_dot(coords, coords);
    if (q >= 0) throw NumericalFailure("point left the timelike cone");
    coords *= 1.0 / (c * std::sqrt(-q));
    if (coords(0) < 0) coords = -coords;
    return {m, std::move(coords)};
}

Vec project_to_tangent(const ModelPoint& x, const Vec& v) {
    double c = x.model.curvature;
    return v + (c * c) * minkowski_dot(x.coords, v) * x.coords;
}

}  // namespace

double dist(const ModelPoint& x, const ModelPoint& y) {
    check_same_model(x, y);
    if (x.model.kind == Model::Kind::Euclidean) return (x.coords - y.coords).norm();
    // Chordal form of acosh(-c^2 <x,y>): the difference vector is spacelike
    // and free of the cancellation that the direct arccosh suffers near 1.
    double c = x.model.curvature;
    Vec diff = x.coords - y.coords;
    double chord = std::sqrt(std::max(0.0, minkowski_dot(diff, diff)));
    return 2.0 / c * std::asinh(0.5 * c * chord);
}

Vec log_map(const ModelPoint& x, const ModelPoint& y) {
    check_same_model(x, y);
    if (x.model.kind == Model::Kind::Euclidean) return y.coords - x.coords;
    double c = x.model.curvature;
    double d = dist(x, y);
    Vec u = y.coords + (c * c) * minkowski_dot(x.coords, y.coords) * x.coords;
    double nu = minkowski_dot(u, u);
    if (nu <= 0 || d == 0) return Vec::Zero(x.coords.size());  // coincident points
    return (d / std::sqrt(nu)) * u;
}

ModelPoint exp_map(const ModelPoint& x, const Vec& v) {
    if (v.size() != x.model.ambient_dim())
        throw ParameterError("tangent vector has wrong ambient dimension");
    if (x.model.kind == Model::Kind::Euclidean) return {x.model, x.coords + v};
    double c = x.model.curvature;
    Vec w = project_to_tangent(x, v);
    double s = std::sqrt(std::max(0.0, minkowski_dot(w, w)));
    if (s < 1e-300) return x;
    Vec coords = std::cosh(c * s) * x.coords + (std::sinh(c * s) / (c * s)) * w;
    return renormalized(x.model, std::move(coords));
}

double tangent_dot(const ModelPoint& x, const Vec& u, const Vec& w) {
    if (x.model.kind == Model::Kind::Euclidean) return u.dot(w);
    return minkowski_dot(u, w);
}

double tangent_norm(const ModelPoint& x, const Vec& v) {
    return std::sqrt(std::max(0.0, tangent_dot(x, v, v)));
}

double angle_at(const ModelPoint& x, const ModelPoint& y, const ModelPoint& z) {
    Vec v1 = log_map(x, y);
    Vec v2 = log_map(x, z);
    double n1 = tangent_norm(x, v1);
    double n2 = tangent_norm(x, v2);
    if (n1 < 1e-12 || n2 < 1e-12)
        throw ParameterError("angle undefined: a triangle leg is degenerate");
    double cosine = std::clamp(tangent_dot(x, v1, v2) / (n1 * n2), -1.0, 1.0);
    return std::acos(cosine);
}

ModelPoint geodesic_point(const ModelPoint& x, const ModelPoint& y, double t) {
    check_same_model(x, y);
    if (t == 0.0) return x;
    if (t == 1.0) return y;
    return exp_map(x, t * log_map(x, y));
}

ModelPoint midpoint(const ModelPoint& x, const ModelPoint& y) {
    return geodesic_point(x, y, 0.5);
}

double cat0_defect(const ModelPoint& x, const ModelPoint& y, const ModelPoint& z) {
    ModelPoint m = midpoint(y, z);
    double dxy = dist(x, y), dxz = dist(x, z), dyz = dist(y, z), dxm = dist(x, m);
    return 0.5 * dxy * dxy + 0.5 * dxz * dxz - 0.25 * dyz * dyz - dxm * dxm;
}

double comparison_angle(double a, double b, double c) {
    if (!(a > 0) || !(b > 0) || c < 0)
        throw ParameterError("comparison angle needs positive adjacent sides");
    if (a + b < c || a + c < b || b + c < a)
        throw ParameterError("side lengths violate the triangle inequality");
    double cosine = std::clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0);
    return std::acos(cosine);
}

double flatness_defect(double lambda, const ModelPoint& x, const ModelPoint& y,
                       const ModelPoint& z) {
    if (!(lambda > 0)) throw ParameterError("scale must be positive");
    check_same_model(x, y);
    check_same_model(x, z);
    double a = dist(x, y), b = dist(x, z);
    if (a < 1e-12 || b < 1e-12)
        throw ParameterError("flatness probe is degenerate");
    double diam = std::max({a, b, dist(y, z)});

    if (x.model.kind == Model::Kind::Euclidean)
        return cat0_defect(x, y, z) / (diam * diam);

    // Congruent triangle (same side lengths and apex angle) in the model of
    // curvature c / lambda: this realizes the probe in the metric lambda*d.
    double gamma = angle_at(x, y, z);
    Model flat = hyperboloid(2, x.model.curvature / lambda);
    ModelPoint apex = base_point(flat);
    Vec u1 = Vec::Zero(3), u2 = Vec::Zero(3);
    u1(1) = a;
    u2(1) = b * std::cos(gamma);
    u2(2) = b * std::sin(gamma);
    ModelPoint yy = exp_map(apex, u1);
    ModelPoint zz = exp_map(apex, u2);
    double d2 = std::max({a, b, dist(yy, zz)});
    return cat0_defect(apex, yy, zz) / (d2 * d2);
}

}  // namespace steinfix::geo
