#include "steinfix/geo/isometry.hpp"

#include <cmath>

namespace steinfix::geo {

namespace {

Mat minkowski_form(int ambient) {
    Mat j = Mat::Identity(ambient, ambient);
    j(0, 0) = -1.0;
    return j;
}

}  // namespace

ModelPoint Isometry::apply(const ModelPoint& x) const {
    if (x.model != model) throw ParameterError("isometry applied to a foreign point");
    if (model.kind == Model::Kind::Euclidean)
        return {model, linear * x.coords + offset};
    Vec mapped = linear * x.coords;
    // Sheet hygiene: undo the 1e-15-level drift of composed products.
    double c = model.curvature;
    double q = minkowski_dot(mapped, mapped);
    if (q >= 0) throw NumericalFailure("isometry image left the timelike cone");
    mapped *= 1.0 / (c * std::sqrt(-q));
    if (mapped(0) < 0) mapped = -mapped;
    return {model, std::move(mapped)};
}

Isometry Isometry::compose(const Isometry& other) const {
    if (model != other.model) throw ParameterError("composing isometries of different models");
    if (model.kind == Model::Kind::Euclidean)
        return {model, linear * other.linear, linear * other.offset + offset};
    return {model, linear * other.linear, Vec()};
}

Isometry Isometry::inverse() const {
    if (model.kind == Model::Kind::Euclidean)
        return {model, linear.transpose(), -(linear.transpose() * offset)};
    Mat j = minkowski_form(model.ambient_dim());
    return {model, j * linear.transpose() * j, Vec()};
}

bool Isometry::is_identity(double tol) const {
    int n = static_cast<int>(linear.rows());
    double d = (linear - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    if (model.kind == Model::Kind::Euclidean && offset.size() > 0)
        d = std::max(d, offset.cwiseAbs().maxCoeff());
    return d <= tol;
}

double Isometry::validate(double tol) const {
    double defect = 0.0;
    if (model.kind == Model::Kind::Euclidean) {
        if (linear.rows() != model.dim || offset.size() != model.dim)
            throw ParameterError("euclidean isometry has wrong dimensions");
        defect = (linear.transpose() * linear - Mat::Identity(model.dim, model.dim)).norm();
    } else {
        int n = model.ambient_dim();
        if (linear.rows() != n) throw ParameterError("hyperboloid isometry has wrong dimensions");
        Mat j = minkowski_form(n);
        defect = (linear.transpose() * j * linear - j).norm();
        ModelPoint probe = base_point(model);
        if ((linear * probe.coords)(0) <= 0)
            throw ParameterError("isometry swaps the hyperboloid sheets");
    }
    if (defect > tol)
        throw ParameterError("isometry constraint violated (defect " + std::to_string(defect) + ")");
    return defect;
}

double Isometry::data_distance(const Isometry& o) const {
    double d = (linear - o.linear).cwiseAbs().maxCoeff();
    if (model.kind == Model::Kind::Euclidean && offset.size() > 0)
        d = std::max(d, (offset - o.offset).cwiseAbs().maxCoeff());
    return d;
}

Isometry identity_isometry(const Model& m) {
    if (m.kind == Model::Kind::Euclidean)
        return {m, Mat::Identity(m.dim, m.dim), Vec::Zero(m.dim)};
    return {m, Mat::Identity(m.ambient_dim(), m.ambient_dim()), Vec()};
}

Isometry euclidean_isometry(Mat rotation, Vec translation) {
    Model m = euclidean(static_cast<int>(rotation.rows()));
    Isometry iso{m, std::move(rotation), std::move(translation)};
    iso.validate();
    return iso;
}

Isometry euclidean_rotation(int dim, int axis_i, int axis_j, double theta, const Vec& center) {
    if (axis_i < 1 || axis_j < 1 || axis_i > dim || axis_j > dim || axis_i == axis_j)
        throw ParameterError("bad rotation plane");
    Mat q = Mat::Identity(dim, dim);
    int a = axis_i - 1, b = axis_j - 1;
    q(a, a) = std::cos(theta);
    q(b, b) = std::cos(theta);
    q(a, b) = -std::sin(theta);
    q(b, a) = std::sin(theta);
    // Conjugate by the translation taking the origin to the center.
    Vec offset = center - q * center;
    return {euclidean(dim), q, offset};
}

Isometry euclidean_reflection(const Vec& normal, const Vec& anchor) {
    double nn = normal.squaredNorm();
    if (nn <= 0) throw ParameterError("reflection needs a nonzero normal");
    int dim = static_cast<int>(normal.size());
    Mat q = Mat::Identity(dim, dim) - (2.0 / nn) * (normal * normal.transpose());
    Vec offset = anchor - q * anchor;
    return {euclidean(dim), q, offset};
}

Isometry hyperboloid_isometry(const Model& m, Mat linear) {
    Isometry iso{m, std::move(linear), Vec()};
    iso.validate();
    return iso;
}

Isometry hyperboloid_rotation(const Model& m, int axis_i, int axis_j, double theta) {
    if (m.kind != Model::Kind::Hyperboloid) throw ParameterError("needs a hyperboloid model");
    if (axis_i < 1 || axis_j < 1 || axis_i > m.dim || axis_j > m.dim || axis_i == axis_j)
        throw ParameterError("bad rotation plane");
    int n = m.ambient_dim();
    Mat l = Mat::Identity(n, n);
    l(axis_i, axis_i) = std::cos(theta);
    l(axis_j, axis_j) = std::cos(theta);
    l(axis_i, axis_j) = -std::sin(theta);
    l(axis_j, axis_i) = std::sin(theta);
    return {m, l, Vec()};
}

Isometry hyperboloid_boost(const Model& m, int axis, double distance) {
    if (m.kind != Model::Kind::Hyperboloid) throw ParameterError("needs a hyperboloid model");
    if (axis < 1 || axis > m.dim) throw ParameterError("bad boost axis");
    int n = m.ambient_dim();
    double t = m.curvature * distance;
    Mat l = Mat::Identity(n, n);
    l(0, 0) = std::cosh(t);
    l(axis, axis) = std::cosh(t);
    l(0, axis) = std::sinh(t);
    l(axis, 0) = std::sinh(t);
    return {m, l, Vec()};
}

Isometry hyperboloid_reflection(const Model& m, int axis) {
    if (m.kind != Model::Kind::Hyperboloid) throw ParameterError("needs a hyperboloid model");
    if (axis < 1 || axis > m.dim) throw ParameterError("bad reflection axis");
    int n = m.ambient_dim();
    Mat l = Mat::Identity(n, n);
    l(axis, axis) = -1.0;
    return {m, l, Vec()};
}

std::vector<Isometry> isometry_closure(const std::vector<Isometry>& generators,
                                       std::size_t cap, double tol) {
    if (generators.empty()) throw ParameterError("closure needs at least one generator");
    for (const auto& g : generators)
        if (g.model != generators[0].model)
            throw ParameterError("generators live in different models");

    std::vector<Isometry> elements = {identity_isometry(generators[0].model)};
    auto find = [&](const Isometry& candidate) {
        for (const auto& e : elements)
            if (e.data_distance(candidate) <= tol) return true;
        return false;
    };
    std::size_t frontier = 1;
    for (std::size_t cur = 0; cur < elements.size(); ++cur) {
        for (const auto& g : generators) {
            Isometry next = elements[cur].compose(g);
            if (find(next)) continue;
            if (elements.size() >= cap)
                throw CapExceeded("isometry closure exceeded cap of " + std::to_string(cap) +
                                      " elements (last frontier size " +
                                      std::to_string(frontier) + ")",
                                  frontier);
            elements.push_back(std::move(next));
        }
        frontier = elements.size() - cur;
    }
    return elements;
}

}  // namespace steinfix::geo
