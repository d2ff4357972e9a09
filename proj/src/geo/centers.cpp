#include "steinfix/geo/centers.hpp"

#include <algorithm>
#include <cmath>

namespace steinfix::geo {

namespace {

double max_dist_sq(const ModelPoint& x, const std::vector<ModelPoint>& pts, int* arg = nullptr) {
    double best = 0.0;
    int idx = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double d = dist(x, pts[i]);
        if (d * d > best) {
            best = d * d;
            idx = static_cast<int>(i);
        }
    }
    if (arg) *arg = idx;
    return best;
}

/// Smooth-max objective (log-sum-exp at inverse temperature beta) and its
/// Riemannian gradient at x.
double smooth_max(const ModelPoint& x, const std::vector<ModelPoint>& pts, double beta,
                  Vec* grad) {
    double m = max_dist_sq(x, pts);
    double z = 0.0;
    if (grad) *grad = Vec::Zero(x.coords.size());
    for (const auto& p : pts) {
        double d = dist(x, p);
        double w = std::exp(beta * (d * d - m));
        z += w;
        if (grad) *grad += w * (-2.0) * log_map(x, p);
    }
    if (grad) *grad /= z;
    return m + std::log(z) / beta;
}

/// Orthonormal tangent frame at x (identity in the flat model).
Mat tangent_frame(const ModelPoint& x) {
    if (x.model.kind == Model::Kind::Euclidean)
        return Mat::Identity(x.model.dim, x.model.dim);
    const int n = x.model.ambient_dim();
    const double c2 = x.model.curvature * x.model.curvature;
    Mat frame(n, x.model.dim);
    int col = 0;
    for (int i = 0; i < n && col < x.model.dim; ++i) {
        Vec b = Vec::Zero(n);
        b(i) = 1.0;
        b += c2 * minkowski_dot(b, x.coords) * x.coords;
        for (int j = 0; j < col; ++j) b -= minkowski_dot(b, frame.col(j)) * frame.col(j);
        double nn = minkowski_dot(b, b);
        if (nn > 1e-14) frame.col(col++) = b / std::sqrt(nn);
    }
    if (col != x.model.dim) throw NumericalFailure("degenerate tangent frame");
    return frame;
}

Vec frame_coords(const ModelPoint& x, const Mat& frame, const Vec& v) {
    if (x.model.kind == Model::Kind::Euclidean) return v;
    Vec j_v = v;
    j_v(0) = -j_v(0);
    return frame.transpose() * j_v;
}

}  // namespace

CircumcenterResult circumcenter(const std::vector<ModelPoint>& points, int anneal_rounds,
                                int inner_steps, double stationarity_tol) {
    if (points.empty()) throw ParameterError("circumcenter of an empty set");
    for (const auto& p : points) check_same_model(points[0], p);

    double spread = 0.0;
    for (const auto& p : points) spread = std::max(spread, dist(points[0], p));
    if (spread <= stationarity_tol)
        return {points[0], spread, 0};
    if (points.size() == 2)
        return {midpoint(points[0], points[1]), 0.5 * dist(points[0], points[1]), 0};

    // Damped subgradient warm start.
    ModelPoint x = points[0];
    int iterations = 0;
    for (int it = 0; it < 200; ++it, ++iterations) {
        int far = 0;
        max_dist_sq(x, points, &far);
        x = geodesic_point(x, points[far], 1.0 / (it + 2));
    }

    // Annealed smooth-max polish with damped Newton steps. The smoothed
    // objective develops a valley of stiffness ~beta across the set of
    // equalized active distances; the Hessian's covariance term captures it,
    // where plain gradient descent stalls.
    const int d = x.model.dim;
    double beta = 1.0 / (max_dist_sq(x, points) + 1e-12);
    double last_move = spread;
    for (int round = 0; round < anneal_rounds; ++round, beta *= 4.0) {
        ModelPoint round_start = x;
        for (int step = 0; step < inner_steps; ++step, ++iterations) {
            Mat frame = tangent_frame(x);
            double m = max_dist_sq(x, points);
            double z = 0.0;
            Vec g_hat = Vec::Zero(d);
            Mat second = Mat::Zero(d, d);
            for (const auto& p : points) {
                double dd = dist(x, p);
                double w = std::exp(beta * (dd * dd - m));
                Vec gi = frame_coords(x, frame, Vec(-2.0 * log_map(x, p)));
                z += w;
                g_hat += w * gi;
                second += w * gi * gi.transpose();
            }
            g_hat /= z;
            second /= z;
            double f0 = m + std::log(z) / beta;
            double gn = g_hat.norm();
            if (gn < 1e-15) break;

            Mat hess = 2.0 * Mat::Identity(d, d) +
                       beta * (second - g_hat * g_hat.transpose());
            Vec dir = -hess.llt().solve(g_hat);
            if (!dir.allFinite() || g_hat.dot(dir) >= 0) dir = -g_hat;

            double t = 1.0;
            bool moved = false;
            for (int bt = 0; bt < 60 && !moved; ++bt, t *= 0.5) {
                ModelPoint trial = exp_map(x, Vec(frame * (t * dir)));
                if (smooth_max(trial, points, beta, nullptr) <
                    f0 - 1e-4 * t * std::abs(g_hat.dot(dir))) {
                    x = trial;
                    moved = true;
                }
            }
            if (!moved) break;
        }
        last_move = dist(round_start, x);
        if (last_move < stationarity_tol * (1.0 + spread) && beta * spread * spread > 1e12)
            break;
    }
    if (last_move > 1e-5 * (1.0 + spread))
        throw NumericalFailure(
            "circumcenter did not converge: last round moved " + std::to_string(last_move) +
            " at radius " + std::to_string(std::sqrt(max_dist_sq(x, points))));
    return {x, std::sqrt(max_dist_sq(x, points)), iterations};
}

ModelPoint barycenter(const std::vector<ModelPoint>& points, std::vector<double> weights,
                      int max_iter, double grad_tol) {
    if (points.empty()) throw ParameterError("barycenter of an empty set");
    for (const auto& p : points) check_same_model(points[0], p);
    if (weights.empty()) weights.assign(points.size(), 1.0);
    if (weights.size() != points.size())
        throw ParameterError("one weight per point required");
    double total = 0.0;
    for (double w : weights) {
        if (w < 0) throw ParameterError("weights must be nonnegative");
        total += w;
    }
    if (!(total > 0)) throw ParameterError("weights must have positive sum");

    if (points[0].model.kind == Model::Kind::Euclidean) {
        Vec mean = Vec::Zero(points[0].coords.size());
        for (std::size_t i = 0; i < points.size(); ++i)
            mean += (weights[i] / total) * points[i].coords;
        return {points[0].model, mean};
    }

    ModelPoint x = points[0];
    for (int it = 0; it < max_iter; ++it) {
        Vec step = Vec::Zero(x.coords.size());
        for (std::size_t i = 0; i < points.size(); ++i)
            step += (weights[i] / total) * log_map(x, points[i]);
        if (tangent_norm(x, step) <= grad_tol) return x;
        x = exp_map(x, step);
    }
    throw NumericalFailure("barycenter iteration cap exceeded");
}

std::vector<ModelPoint> orbit_points(const std::vector<Isometry>& group_elements,
                                     const ModelPoint& x0, double dedup_tol) {
    std::vector<ModelPoint> orbit;
    for (const auto& g : group_elements) {
        ModelPoint y = g.apply(x0);
        bool seen = false;
        for (const auto& p : orbit)
            if (dist(p, y) <= dedup_tol) {
                seen = true;
                break;
            }
        if (!seen) orbit.push_back(std::move(y));
    }
    if (orbit.empty()) orbit.push_back(x0);
    return orbit;
}

ModelPoint cartan_fixed_point(const std::vector<Isometry>& generators,
                              const std::vector<Isometry>& group_elements,
                              const ModelPoint& x0, double fixed_tol) {
    auto orbit = orbit_points(group_elements, x0, 1e-9);
    ModelPoint q = circumcenter(orbit).center;

    // Equivariant polish: averaging the whole element list commutes with the
    // group action, so the result is fixed up to roundoff.
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<ModelPoint> cloud;
        cloud.reserve(group_elements.size());
        for (const auto& g : group_elements) cloud.push_back(g.apply(q));
        q = barycenter(cloud, {}, 200, 1e-13);
    }

    double worst = 0.0;
    for (const auto& g : generators) worst = std::max(worst, dist(g.apply(q), q));
    if (worst > fixed_tol)
        throw NumericalFailure("cartan fixed point check failed: displacement " +
                               std::to_string(worst));
    return q;
}

ModelPoint cartan_fixed_point(const std::vector<Isometry>& generators, const ModelPoint& x0,
                              std::size_t cap, double fixed_tol) {
    return cartan_fixed_point(generators, isometry_closure(generators, cap), x0, fixed_tol);
}

}  // namespace steinfix::geo
