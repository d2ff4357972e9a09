#include "steinfix/sol/solver.hpp"

#include <cmath>
#include <limits>

namespace steinfix::sol {

using geo::ModelPoint;
using geo::Vec;

double energy_f(const ModelPoint& x, const ModelPoint& y, const ModelPoint& z) {
    double a = geo::dist(x, y), b = geo::dist(y, z), c = geo::dist(z, x);
    return a * a + b * b + c * c;
}

double energy_h(const Scenario& s, const ModelPoint& x) {
    double total = 0.0;
    for (int p = 0; p < 3; ++p) {
        double d = geo::distance_to(x, s.pair_fixed[p]);
        total += d * d;
    }
    return total;
}

double diam_k(const Scenario& s, const ModelPoint& x) {
    double best = 0.0;
    for (const auto& k : s.k_set) best = std::max(best, geo::dist(x, k.apply(x)));
    return best;
}

MonitorRecord monitor_ttt(const Scenario& s, const ModelPoint& x, int iteration) {
    MonitorRecord r;
    r.kind = MonitorRecord::Kind::Ttt;
    r.iteration = iteration;
    double d = diam_k(s, x);
    r.lhs = energy_h(s, x);
    r.rhs = 0.25 * d * d;
    r.ok = r.lhs >= r.rhs - 1e-9;
    return r;
}

MonitorRecord monitor_h_bound(const Scenario& s, const ModelPoint& x, int iteration) {
    MonitorRecord r;
    r.kind = MonitorRecord::Kind::HBound;
    r.iteration = iteration;
    double d = diam_k(s, x);
    r.lhs = energy_h(s, x);
    r.rhs = 3.0 * d * d;
    r.ok = r.lhs <= r.rhs + 1e-9;
    return r;
}

std::pair<ModelPoint, bool> good_point_step(const Scenario& s, const ModelPoint& x,
                                            std::mt19937_64& rng,
                                            std::vector<MonitorRecord>* sink, int iteration) {
    double d0 = diam_k(s, x);
    if (d0 <= 1e-14) return {x, false};  // already fixed: nothing can shrink

    std::vector<ModelPoint> candidates;
    for (int p = 0; p < 3; ++p) {
        auto orbit = geo::orbit_points(s.pair_elements[p], x, 1e-12);
        candidates.push_back(geo::circumcenter(orbit, 30, 25, 1e-7).center);
    }
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 8; ++trial) {
        Vec dir(x.model.ambient_dim());
        for (int i = 0; i < dir.size(); ++i) dir(i) = g(rng);
        if (x.model.kind == geo::Model::Kind::Hyperboloid) dir(0) = 0;
        double nn = geo::tangent_norm(x, dir);
        if (nn < 1e-12) continue;
        double radius = (trial % 2 ? 0.5 : 0.25) * d0;
        candidates.push_back(geo::exp_map(x, (radius / nn) * dir));
    }

    for (const auto& y : candidates) {
        if (diam_k(s, y) > d0 / 5.0) continue;
        if (sink) {
            MonitorRecord halving;
            halving.kind = MonitorRecord::Kind::GoodPoint;
            halving.iteration = iteration;
            halving.lhs = energy_h(s, y);
            halving.rhs = 0.5 * energy_h(s, x);
            halving.ok = halving.lhs <= halving.rhs + 1e-9;
            sink->push_back(halving);
            sink->push_back(monitor_h_bound(s, y, iteration));
        }
        return {y, true};
    }
    return {x, false};
}

VertexCertificate vertex_angle_certificate(const TriangleState& st) {
    VertexCertificate cert;
    double sides[3] = {geo::dist(st.x, st.y), geo::dist(st.y, st.z), geo::dist(st.z, st.x)};
    for (double side : sides)
        if (side <= 1e-10) return cert;  // degenerate: certifies nothing
    cert.available = true;
    cert.angles[0] = geo::angle_at(st.x, st.y, st.z);
    cert.angles[1] = geo::angle_at(st.y, st.x, st.z);
    cert.angles[2] = geo::angle_at(st.z, st.x, st.y);
    cert.angle_sum = cert.angles[0] + cert.angles[1] + cert.angles[2];
    cert.fat = cert.angles[0] > kPi / 3 && cert.angles[1] > kPi / 3 && cert.angles[2] > kPi / 3;
    return cert;
}

namespace {

/// Minimize d^2(v,a) + d^2(v,b) over the fixed set. Euclidean: exact
/// midpoint projection. Hyperboloid: projected gradient with Armijo
/// backtracking (initial step 1, shrink 0.5, slope 1e-4).
ModelPoint vertex_update(const geo::GeodesicSubspace& set, const ModelPoint& current,
                         const ModelPoint& a, const ModelPoint& b) {
    if (set.model.kind == geo::Model::Kind::Euclidean)
        return geo::project(geo::midpoint(a, b), set);

    ModelPoint v = current;
    auto phi = [&](const ModelPoint& p) {
        double da = geo::dist(p, a), db = geo::dist(p, b);
        return da * da + db * db;
    };
    for (int step = 0; step < 60; ++step) {
        Vec descent = 2.0 * (geo::log_map(v, a) + geo::log_map(v, b));
        Vec dir = geo::tangent_project(set, v, descent);
        double gn = geo::tangent_norm(v, dir);
        if (gn < 1e-12) break;
        double f0 = phi(v);
        double t = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 50 && !moved; ++bt, t *= 0.5) {
            ModelPoint trial = geo::exp_map(v, t * dir);
            if (phi(trial) <= f0 - 1e-4 * t * gn * gn) {
                v = trial;
                moved = true;
            }
        }
        if (!moved) break;
    }
    // Geodesic steps stay in the (totally geodesic) set; re-project to shed
    // accumulated roundoff.
    return geo::project(v, set);
}

}  // namespace

SolverResult minimize_f(const Scenario& s) {
    SolverResult result;
    std::mt19937_64 rng(s.seed ^ 0xD1B54A32D192ED03ull);

    ModelPoint x = s.initial[0], y = s.initial[1], z = s.initial[2];
    double f = energy_f(x, y, z);
    result.f_trace.push_back(f);

    const double tol = s.fixed_point_tol();
    int iteration = 0;
    auto record_monitors = [&](const ModelPoint& probe, bool try_good_point) {
        result.monitors.push_back(monitor_ttt(s, probe, iteration));
        result.monitors.push_back(monitor_h_bound(s, probe, iteration));
        if (try_good_point) good_point_step(s, probe, rng, &result.monitors, iteration);
    };

    for (; iteration < s.max_iterations; ++iteration) {
        x = vertex_update(s.pair_fixed[0], x, y, z);
        y = vertex_update(s.pair_fixed[1], y, x, z);
        z = vertex_update(s.pair_fixed[2], z, x, y);
        f = energy_f(x, y, z);
        result.f_trace.push_back(f);

        bool monitor_now = iteration < 5 || iteration % 10 == 0;
        if (monitor_now) {
            ModelPoint q = geo::barycenter({x, y, z});
            record_monitors(q, iteration < 30);
        }

        if (f <= tol) {
            result.status = SolverResult::Status::FixedPoint;
            break;
        }
        // Stalled descent: relative decrease over the last 50 iterations.
        std::size_t n = result.f_trace.size();
        if (n > 50) {
            double before = result.f_trace[n - 51];
            if (before - f <= 1e-12 * std::max(1.0, before)) {
                result.status = SolverResult::Status::MinimalTriangle;
                break;
            }
        }
    }
    if (iteration >= s.max_iterations) result.status = SolverResult::Status::IterationCap;

    result.iterations = iteration;
    result.final_state = TriangleState{x, y, z, f, {0, 0, 0}, iteration};
    result.certificate = vertex_angle_certificate(result.final_state);
    for (int i = 0; i < 3; ++i)
        result.final_state.vertex_angles[i] = result.certificate.available
                                                  ? result.certificate.angles[i]
                                                  : std::numeric_limits<double>::quiet_NaN();

    if (result.status == SolverResult::Status::FixedPoint) {
        ModelPoint q0 = geo::barycenter({x, y, z});
        const auto& group = s.full_group.empty()
                                ? geo::isometry_closure(s.generators, 4096)
                                : s.full_group;
        result.fixed_point = geo::cartan_fixed_point(s.generators, group, q0, 1e-8);
    }
    return result;
}

}  // namespace steinfix::sol
