#include "doctest.h"

#include <cmath>
#include <random>

#include "steinfix/sol/fh.hpp"
#include "steinfix/sol/solver.hpp"

using namespace steinfix;
using namespace steinfix::sol;
using geo::Model;
using geo::ModelPoint;
using geo::Vec;

namespace {

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

ModelPoint ep(double a, double b) { return {geo::euclidean(2), v2(a, b)}; }

/// Hand-built scenario: three concurrent mirror lines through the origin at
/// angles 0, 60, 120 degrees, each constraint set the fixed line of one
/// reflection (same shape as the stress kind, but with a common point).
Scenario concurrent_lines_scenario(double scale_anchor = 0.0) {
    Scenario s;
    s.model = geo::euclidean(2);
    Vec anchor = v2(scale_anchor, scale_anchor);
    for (int i = 0; i < 3; ++i) {
        double alpha = i * kPi / 3.0;
        Vec normal = v2(-std::sin(alpha), std::cos(alpha));
        auto refl = geo::euclidean_reflection(normal, anchor);
        s.subgroup_gens[i] = {refl};
        s.pair_elements[i] = {geo::identity_isometry(s.model), refl};
        s.pair_fixed[i] = geo::fixed_subspace({refl});
        s.generators.push_back(refl);
    }
    s.k_set = s.generators;
    s.k_set.push_back(geo::identity_isometry(s.model));
    for (int i = 0; i < 3; ++i) s.initial[i] = geo::project(ep(0.9, 0.4), s.pair_fixed[i]);
    s.scale = 1.0 + std::abs(scale_anchor);
    s.max_iterations = 2000;
    return s;
}

std::mt19937_64 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937_64(seq);
}

}  // namespace

TEST_CASE("energy_f basics") {
    ModelPoint p = ep(0.3, -2);
    CHECK(energy_f(p, p, p) == 0.0);
    CHECK(energy_f(ep(0, 0), ep(1, 0), ep(0, 1)) == doctest::Approx(4.0).epsilon(1e-13));

    // Invariance under a simultaneous isometry.
    auto rot = geo::euclidean_rotation(2, 1, 2, 1.1, v2(0.4, -0.7));
    double before = energy_f(ep(0, 0), ep(1, 0), ep(0, 1));
    double after = energy_f(rot.apply(ep(0, 0)), rot.apply(ep(1, 0)), rot.apply(ep(0, 1)));
    CHECK(after == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("energy_h on concurrent lines") {
    Scenario s = concurrent_lines_scenario();
    // Point (1,0): distances to the three lines are 0, sin(60), sin(120).
    double expected = 0.0 + 0.75 + 0.75;
    CHECK(energy_h(s, ep(1, 0)) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(energy_h(s, ep(0, 0)) < 1e-20);

    auto rng = rng_for("energy-h");
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 50; ++i) CHECK(energy_h(s, ep(u(rng), u(rng))) >= 0.0);
}

TEST_CASE("diam_k basics") {
    Scenario s = concurrent_lines_scenario();
    CHECK(diam_k(s, ep(0, 0)) < 1e-14);  // common point is globally fixed

    // Rotation by pi about the origin displaces (1,0) by 2.
    Scenario rot_scenario;
    rot_scenario.model = geo::euclidean(2);
    auto rot = geo::euclidean_rotation(2, 1, 2, kPi, v2(0, 0));
    rot_scenario.k_set = {rot};
    CHECK(diam_k(rot_scenario, ep(1, 0)) == doctest::Approx(2.0).epsilon(1e-12));

    // Monotone under adding elements to K.
    double before = diam_k(rot_scenario, ep(0.3, 0.8));
    rot_scenario.k_set.push_back(geo::euclidean_rotation(2, 1, 2, kPi / 3, v2(2, 0)));
    CHECK(diam_k(rot_scenario, ep(0.3, 0.8)) >= before);
}

TEST_CASE("monitors on sampled points") {
    Scenario s = concurrent_lines_scenario();
    auto fixed = monitor_ttt(s, ep(0, 0));
    CHECK(fixed.ok);
    CHECK(fixed.lhs == doctest::Approx(0.0));
    CHECK(fixed.rhs == doctest::Approx(0.0));

    auto rng = rng_for("monitor-ttt");
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 1000; ++i) {
        ModelPoint p = ep(u(rng), u(rng));
        CHECK(monitor_ttt(s, p).ok);
        CHECK(monitor_h_bound(s, p).ok);
    }

    // Metric scaling: both sides of (ttt) scale by lambda^2.
    double lambda = 3.0;
    Scenario scaled = concurrent_lines_scenario();
    for (int i = 0; i < 3; ++i) {
        double alpha = i * kPi / 3.0;
        Vec normal = v2(-std::sin(alpha), std::cos(alpha));
        auto refl = geo::euclidean_reflection(normal, v2(0, 0));
        scaled.pair_fixed[i] = geo::fixed_subspace({refl});
    }
    ModelPoint p = ep(0.7, -0.4);
    ModelPoint p_scaled = ep(lambda * 0.7, lambda * -0.4);
    auto base_rec = monitor_ttt(s, p);
    auto scaled_rec = monitor_ttt(scaled, p_scaled);
    CHECK(scaled_rec.lhs == doctest::Approx(lambda * lambda * base_rec.lhs).epsilon(1e-10));
    CHECK(scaled_rec.rhs == doctest::Approx(lambda * lambda * base_rec.rhs).epsilon(1e-10));
}

TEST_CASE("good point step") {
    Scenario s = concurrent_lines_scenario();
    auto rng = rng_for("good-point");

    // A globally fixed point cannot be improved.
    auto [same, applied0] = good_point_step(s, ep(0, 0), rng);
    CHECK_FALSE(applied0);

    // Whenever the step applies, the halving conclusion must hold.
    std::vector<MonitorRecord> sink;
    int applied_count = 0;
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 40; ++i) {
        ModelPoint p = ep(u(rng), u(rng));
        auto [y, applied] = good_point_step(s, p, rng, &sink);
        if (!applied) continue;
        ++applied_count;
        CHECK(energy_h(s, y) <= 0.5 * energy_h(s, p) + 1e-9);
        CHECK(diam_k(s, y) <= diam_k(s, p) / 5.0 + 1e-12);
    }
    CHECK(applied_count > 0);
    for (const auto& rec : sink) CHECK(rec.ok);
}

TEST_CASE("vertex angle certificate") {
    TriangleState eq{ep(0, 0), ep(1, 0), ep(0.5, std::sqrt(3.0) / 2), 0, {0, 0, 0}, 0};
    auto cert = vertex_angle_certificate(eq);
    REQUIRE(cert.available);
    for (double a : cert.angles) CHECK(a == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK_FALSE(cert.fat);  // equality is not strict fatness
    CHECK(cert.angle_sum == doctest::Approx(kPi).epsilon(1e-12));

    // Hyperboloid triangles have angle sum at most pi.
    Model h2 = geo::hyperboloid(2, 1.0);
    auto rng = rng_for("angle-sum");
    std::normal_distribution<double> g;
    for (int i = 0; i < 200; ++i) {
        auto sample = [&]() {
            Vec t(3);
            t << 0, g(rng), g(rng);
            return geo::exp_map(geo::base_point(h2), t);
        };
        TriangleState st{sample(), sample(), sample(), 0, {0, 0, 0}, 0};
        auto c = vertex_angle_certificate(st);
        if (!c.available) continue;
        CHECK(c.angle_sum <= kPi + 1e-9);
    }

    TriangleState degenerate{ep(0, 0), ep(0, 0), ep(1, 1), 0, {0, 0, 0}, 0};
    CHECK_FALSE(vertex_angle_certificate(degenerate).available);
}

TEST_CASE("minimize_f finds planted common points") {
    // Mirrors through a common point in the plane.
    ScenarioParams mp;
    mp.kind = ScenarioKind::Mirrors;
    mp.model = geo::euclidean(2);
    mp.seed = 11;
    Scenario mirrors = make_scenario(mp);
    auto r = minimize_f(mirrors);
    CHECK(r.status == SolverResult::Status::FixedPoint);
    CHECK(r.final_state.f_value <= mirrors.fixed_point_tol());
    REQUIRE(r.fixed_point.has_value());
    for (const auto& gen : mirrors.generators)
        CHECK(geo::dist(gen.apply(*r.fixed_point), *r.fixed_point) <= 1e-8);

    // Same construction on the hyperboloid.
    mp.model = geo::hyperboloid(2, 1.0);
    mp.seed = 12;
    Scenario hyp = make_scenario(mp);
    auto rh = minimize_f(hyp);
    CHECK(rh.status == SolverResult::Status::FixedPoint);
    REQUIRE(rh.fixed_point.has_value());
    for (const auto& gen : hyp.generators)
        CHECK(geo::dist(gen.apply(*rh.fixed_point), *rh.fixed_point) <= 1e-8);

    // Higher-dimensional mirrors exercise non-point fixed sets.
    mp.model = geo::euclidean(8);
    mp.seed = 13;
    Scenario wide = make_scenario(mp);
    auto rw = minimize_f(wide);
    CHECK(rw.status == SolverResult::Status::FixedPoint);
    REQUIRE(rw.fixed_point.has_value());
    for (const auto& gen : wide.generators)
        CHECK(geo::dist(gen.apply(*rw.fixed_point), *rw.fixed_point) <= 1e-8);
}

TEST_CASE("minimize_f recovers coboundary translations") {
    ScenarioParams cp;
    cp.kind = ScenarioKind::Coboundary;
    cp.model = geo::euclidean(8);
    cp.heisenberg_p = 2;
    cp.seed = 21;
    Scenario s = make_scenario(cp);
    REQUIRE(s.planted_fixed_point.has_value());
    auto r = minimize_f(s);
    CHECK(r.status == SolverResult::Status::FixedPoint);
    REQUIRE(r.fixed_point.has_value());
    CHECK(geo::dist(*r.fixed_point, *s.planted_fixed_point) <= 1e-6);
}

TEST_CASE("minimize_f on rep-embedded groups") {
    ScenarioParams rp;
    rp.kind = ScenarioKind::RepEmbedded;
    rp.model = geo::euclidean(8);  // regular representation of the p=2 group
    rp.heisenberg_p = 2;
    rp.seed = 31;
    Scenario s = make_scenario(rp);
    auto r = minimize_f(s);
    CHECK(r.status == SolverResult::Status::FixedPoint);
    REQUIRE(r.fixed_point.has_value());
    for (const auto& gen : s.generators)
        CHECK(geo::dist(gen.apply(*r.fixed_point), *r.fixed_point) <= 1e-8);

    rp.model = geo::euclidean(6);  // realified 3-dimensional irreducible
    rp.heisenberg_p = 3;
    rp.seed = 32;
    auto r6 = minimize_f(make_scenario(rp));
    CHECK(r6.status == SolverResult::Status::FixedPoint);
}

TEST_CASE("minimize_f never claims a fixed point on stress scenarios") {
    ScenarioParams sp;
    sp.kind = ScenarioKind::Stress;
    sp.model = geo::euclidean(2);
    sp.seed = 41;
    Scenario s = make_scenario(sp);
    auto r = minimize_f(s);
    CHECK(r.status != SolverResult::Status::FixedPoint);
    CHECK_FALSE(r.fixed_point.has_value());
    CHECK(r.final_state.f_value > 0.1);

    // Descent and first-order stationarity at the stalled triangle.
    for (std::size_t i = 1; i < r.f_trace.size(); ++i)
        CHECK(r.f_trace[i] <= r.f_trace[i - 1] + 1e-12);
    if (r.status == SolverResult::Status::MinimalTriangle) {
        const auto& st = r.final_state;
        std::array<ModelPoint, 3> verts = {st.x, st.y, st.z};
        for (int v = 0; v < 3; ++v) {
            for (double dir : {1.0, -1.0}) {
                Vec step = s.pair_fixed[v].directions.col(0) * dir * 1e-4;
                auto moved = verts;
                moved[v] = geo::exp_map(verts[v], step);
                double f_moved = energy_f(moved[0], moved[1], moved[2]);
                CHECK(f_moved >= st.f_value - 1e-8);
            }
        }
    }
}

TEST_CASE("monitor records from solver runs never flag violations") {
    for (auto seed : {51ull, 52ull}) {
        ScenarioParams mp;
        mp.kind = ScenarioKind::Mirrors;
        mp.model = geo::euclidean(8);
        mp.seed = seed;
        auto r = minimize_f(make_scenario(mp));
        for (const auto& rec : r.monitors) CHECK(rec.ok);
    }
}

TEST_CASE("fh_affine_minimize") {
    // Actions sharing a common fixed point: value 0 at the planted point.
    ScenarioParams cp;
    cp.kind = ScenarioKind::Coboundary;
    cp.model = geo::euclidean(8);
    cp.heisenberg_p = 2;
    cp.seed = 61;
    Scenario s = make_scenario(cp);
    std::array<std::vector<geo::Isometry>, 3> actions;
    for (int p = 0; p < 3; ++p) actions[p] = s.pair_elements[p];
    auto res = fh_affine_minimize(actions);
    CHECK(res.value <= 1e-18);
    CHECK((res.minimizer - s.planted_fixed_point->coords).norm() < 1e-7);

    // Three concurrent lines: the minimizer is their common point.
    Scenario lines = concurrent_lines_scenario();
    auto common = fh_affine_minimize(lines.pair_fixed);
    CHECK(common.value <= 1e-18);
    CHECK(common.minimizer.norm() < 1e-9);

    // Stress case: three mirror lines forming a triangle; grid-search oracle.
    auto l1 = geo::euclidean_reflection(v2(0, 1), v2(0, 0));
    auto l2 = geo::euclidean_reflection(v2(std::sin(1.1), -std::cos(1.1)), v2(2, 0));
    auto l3 = geo::euclidean_reflection(v2(std::sin(-0.7), -std::cos(-0.7)), v2(0, 1));
    std::array<geo::GeodesicSubspace, 3> sets = {geo::fixed_subspace({l1}),
                                                 geo::fixed_subspace({l2}),
                                                 geo::fixed_subspace({l3})};
    auto stress = fh_affine_minimize(sets);
    CHECK(stress.value > 1e-6);

    auto objective = [&](double px, double py) {
        ModelPoint p = ep(px, py);
        double total = 0;
        for (const auto& set : sets) {
            double d = geo::distance_to(p, set);
            total += d * d;
        }
        return total;
    };
    double bx = 0, by = 0, bf = 1e100;
    double lo_x = -4, hi_x = 5, lo_y = -4, hi_y = 5;
    for (int level = 0; level < 5; ++level) {
        for (int i = 0; i <= 120; ++i)
            for (int j = 0; j <= 120; ++j) {
                double px = lo_x + (hi_x - lo_x) * i / 120.0;
                double py = lo_y + (hi_y - lo_y) * j / 120.0;
                double f = objective(px, py);
                if (f < bf) {
                    bf = f;
                    bx = px;
                    by = py;
                }
            }
        double wx = (hi_x - lo_x) / 30.0, wy = (hi_y - lo_y) / 30.0;
        lo_x = bx - wx;
        hi_x = bx + wx;
        lo_y = by - wy;
        hi_y = by + wy;
    }
    CHECK((stress.minimizer - v2(bx, by)).norm() < 1e-6);
    CHECK(stress.value == doctest::Approx(bf).epsilon(1e-9));
}

TEST_CASE("fh consistency: affine zero iff solver fixed point") {
    ScenarioParams mp;
    mp.kind = ScenarioKind::Mirrors;
    mp.model = geo::euclidean(8);
    mp.seed = 71;
    Scenario mirrors = make_scenario(mp);
    auto affine = fh_affine_minimize(mirrors.pair_fixed);
    auto solved = minimize_f(mirrors);
    CHECK(affine.value <= 1e-9);
    CHECK(solved.status == SolverResult::Status::FixedPoint);

    ScenarioParams sp;
    sp.kind = ScenarioKind::Stress;
    sp.model = geo::euclidean(2);
    sp.seed = 72;
    Scenario stress = make_scenario(sp);
    auto affine_s = fh_affine_minimize(stress.pair_fixed);
    auto solved_s = minimize_f(stress);
    CHECK(affine_s.value > 1e-9);
    CHECK(solved_s.status != SolverResult::Status::FixedPoint);
}

TEST_CASE("barycenter inequality") {
    // Equilateral: exact equality d^2(q,v) = 4 d^2(q, opposite side).
    auto eq = barycenter_inequality_check(v2(0, 0), v2(1, 0), v2(0.5, std::sqrt(3.0) / 2));
    CHECK(eq.ok);
    CHECK(std::abs(eq.min_slack) < 1e-9);
    CHECK(eq.vertex_d_sq[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(eq.segment_d_sq[0] == doctest::Approx(1.0 / 12).epsilon(1e-12));

    // Degenerate collinear triple.
    auto col = barycenter_inequality_check(v2(0, 0), v2(1, 0), v2(2, 0));
    CHECK(col.ok);

    // Random triangles in dimensions 2..16.
    auto rng = rng_for("barycenter-ineq");
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 500; ++trial) {
        int dim = 2 + trial % 15;
        Vec a(dim), b(dim), c(dim);
        for (int i = 0; i < dim; ++i) {
            a(i) = g(rng);
            b(i) = g(rng);
            c(i) = g(rng);
        }
        CHECK(barycenter_inequality_check(a, b, c).ok);
    }
}

TEST_CASE("scenario determinism") {
    for (auto kind : {ScenarioKind::Mirrors, ScenarioKind::Coboundary,
                      ScenarioKind::RepEmbedded, ScenarioKind::Stress}) {
        ScenarioParams p;
        p.kind = kind;
        p.model = kind == ScenarioKind::Coboundary ? geo::euclidean(8)
                  : kind == ScenarioKind::RepEmbedded ? geo::euclidean(8)
                                                      : geo::euclidean(2);
        p.heisenberg_p = 2;
        p.seed = 99;
        CHECK(make_scenario(p).serialize() == make_scenario(p).serialize());
        ScenarioParams q = p;
        q.seed = 100;
        CHECK(make_scenario(p).serialize() != make_scenario(q).serialize());
    }
}
