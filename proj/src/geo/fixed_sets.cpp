#include "steinfix/geo/fixed_sets.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace steinfix::geo {

namespace {

constexpr double kRankTol = 1e-10;

/// Orthonormal basis of the null space of a (possibly empty) stacked matrix.
Mat null_space(const Mat& a, int cols) {
    if (a.rows() == 0) return Mat::Identity(cols, cols);
    Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
    double sigma0 = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > kRankTol * std::max(1.0, sigma0)) ++rank;
    return svd.matrixV().rightCols(cols - rank);
}

}  // namespace

int GeodesicSubspace::intrinsic_dim() const {
    if (model.kind == Model::Kind::Euclidean) return static_cast<int>(directions.cols());
    return static_cast<int>(basis.cols()) - 1;
}

GeodesicSubspace full_space(const Model& m) {
    GeodesicSubspace s;
    s.model = m;
    if (m.kind == Model::Kind::Euclidean) {
        s.base = Vec::Zero(m.dim);
        s.directions = Mat::Identity(m.dim, m.dim);
        s.witness_point = origin(m);
    } else {
        s.basis = Mat::Identity(m.ambient_dim(), m.ambient_dim());
        s.witness_point = base_point(m);
    }
    return s;
}

GeodesicSubspace fixed_subspace(const std::vector<Isometry>& action, double tol) {
    if (action.empty()) throw ParameterError("fixed_subspace needs at least one isometry");
    const Model m = action[0].model;
    for (const auto& g : action)
        if (g.model != m) throw ParameterError("isometries live in different models");

    GeodesicSubspace s;
    s.model = m;

    if (m.kind == Model::Kind::Euclidean) {
        const int d = m.dim;
        Mat a(static_cast<int>(action.size()) * d, d);
        Vec rhs(static_cast<int>(action.size()) * d);
        for (std::size_t i = 0; i < action.size(); ++i) {
            a.middleRows(static_cast<int>(i) * d, d) = action[i].linear - Mat::Identity(d, d);
            rhs.segment(static_cast<int>(i) * d, d) = -action[i].offset;
        }
        Vec x = a.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
        double residual = (a * x - rhs).norm();
        if (residual > tol * (1.0 + rhs.norm()))
            throw EmptyFixedSet("no common fixed point (least-squares residual " +
                                std::to_string(residual) + ")");
        s.base = x;
        s.directions = null_space(a, d);
        s.witness_point = {m, x};
        return s;
    }

    const int n = m.ambient_dim();
    Mat a(static_cast<int>(action.size()) * n, n);
    for (std::size_t i = 0; i < action.size(); ++i)
        a.middleRows(static_cast<int>(i) * n, n) = action[i].linear - Mat::Identity(n, n);
    Mat w = null_space(a, n);
    if (w.cols() == 0)
        throw EmptyFixedSet("fixed subspace of the linear parts is trivial");

    // Timelike witness: most negative eigenvalue of the restricted form.
    Mat j = Mat::Identity(n, n);
    j(0, 0) = -1.0;
    Mat restricted = w.transpose() * j * w;
    Eigen::SelfAdjointEigenSolver<Mat> eig((restricted + restricted.transpose()) / 2.0);
    double lambda_min = eig.eigenvalues()(0);
    if (lambda_min >= -1e-12)
        throw EmptyFixedSet("fixed subspace contains no timelike vector (min eigenvalue " +
                            std::to_string(lambda_min) + ")");
    Vec witness = w * eig.eigenvectors().col(0);
    witness *= 1.0 / (m.curvature * std::sqrt(-lambda_min));
    if (witness(0) < 0) witness = -witness;

    s.basis = w;
    s.witness_point = {m, witness};
    check_point(s.witness_point);
    return s;
}

ModelPoint project(const ModelPoint& x, const GeodesicSubspace& s) {
    if (x.model != s.model) throw ParameterError("projecting a foreign point");
    if (s.model.kind == Model::Kind::Euclidean) {
        Vec rel = x.coords - s.base;
        return {s.model, s.base + s.directions * (s.directions.transpose() * rel)};
    }
    // Minkowski-orthogonal projection onto span(basis), renormalized to the
    // sheet; this is the metric nearest point by Lagrange optimality of the
    // linear functional <x, .> on the sheet.
    const int n = s.model.ambient_dim();
    Mat j = Mat::Identity(n, n);
    j(0, 0) = -1.0;
    Mat gram = s.basis.transpose() * j * s.basis;
    Vec rhs = s.basis.transpose() * (j * x.coords);
    Eigen::FullPivLU<Mat> lu(gram);
    if (!lu.isInvertible())
        throw NumericalFailure("projection undefined: degenerate restricted form");
    Vec w = s.basis * lu.solve(rhs);
    double q = minkowski_dot(w, w);
    if (q >= -1e-300)
        throw NumericalFailure("projection undefined: Minkowski projection is not timelike");
    w *= 1.0 / (s.model.curvature * std::sqrt(-q));
    if (w(0) < 0) w = -w;
    ModelPoint p{s.model, std::move(w)};
    check_point(p, 1e-8);
    return p;
}

double distance_to(const ModelPoint& x, const GeodesicSubspace& s) {
    return dist(x, project(x, s));
}

bool contains(const GeodesicSubspace& s, const ModelPoint& x, double tol) {
    return dist(x, project(x, s)) <= tol;
}

Vec tangent_project(const GeodesicSubspace& s, const ModelPoint& at, const Vec& v) {
    if (s.model.kind == Model::Kind::Euclidean)
        return s.directions * (s.directions.transpose() * v);

    // Tangent space of the sheet-intersection at `at`: vectors of span(basis)
    // Minkowski-orthogonal to `at`. Build a J-orthonormal basis (J is
    // positive definite there) and expand.
    const double c2 = s.model.curvature * s.model.curvature;
    std::vector<Vec> frame;
    for (int i = 0; i < s.basis.cols(); ++i) {
        Vec b = s.basis.col(i);
        b += c2 * minkowski_dot(b, at.coords) * at.coords;  // kill the point direction
        for (const Vec& f : frame) b -= minkowski_dot(b, f) * f;
        double nn = minkowski_dot(b, b);
        if (nn > 1e-20) frame.push_back(b / std::sqrt(nn));
    }
    Vec out = Vec::Zero(v.size());
    for (const Vec& f : frame) out += minkowski_dot(v, f) * f;
    return out;
}

}  // namespace steinfix::geo
