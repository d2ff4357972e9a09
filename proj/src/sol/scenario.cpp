#include "steinfix/sol/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "steinfix/rep/heisenberg.hpp"

namespace steinfix::sol {

using geo::Isometry;
using geo::Mat;
using geo::Model;
using geo::ModelPoint;
using geo::Vec;

ScenarioKind scenario_kind_from_name(const std::string& name) {
    if (name == "mirrors") return ScenarioKind::Mirrors;
    if (name == "coboundary") return ScenarioKind::Coboundary;
    if (name == "rep-embedded") return ScenarioKind::RepEmbedded;
    if (name == "stress") return ScenarioKind::Stress;
    throw ParameterError("unknown scenario kind: " + name);
}

std::string scenario_kind_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Mirrors: return "mirrors";
        case ScenarioKind::Coboundary: return "coboundary";
        case ScenarioKind::RepEmbedded: return "rep-embedded";
        case ScenarioKind::Stress: return "stress";
    }
    return "?";
}

namespace {

Vec random_direction(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    Vec v(dim);
    double nn = 0;
    do {
        for (int i = 0; i < dim; ++i) v(i) = g(rng);
        nn = v.norm();
    } while (nn < 1e-8);
    return v / nn;
}

ModelPoint random_model_point(std::mt19937_64& rng, const Model& m, double radius) {
    std::uniform_real_distribution<double> u(0.2, 1.0);
    if (m.kind == Model::Kind::Euclidean)
        return {m, radius * u(rng) * random_direction(rng, m.dim)};
    Vec tangent = Vec::Zero(m.ambient_dim());
    Vec dir = random_direction(rng, m.dim);
    for (int i = 0; i < m.dim; ++i) tangent(i + 1) = dir(i);
    return geo::exp_map(geo::base_point(m), radius * u(rng) * tangent);
}

/// Random rotation assembled from seeded plane rotations.
Mat random_rotation(std::mt19937_64& rng, int dim) {
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    Mat q = Mat::Identity(dim, dim);
    for (int i = 0; i + 1 < dim; ++i) {
        double a = u(rng);
        Mat r = Mat::Identity(dim, dim);
        r(i, i) = std::cos(a);
        r(i + 1, i + 1) = std::cos(a);
        r(i, i + 1) = -std::sin(a);
        r(i + 1, i) = std::sin(a);
        q = q * r;
    }
    return q;
}

/// Hyperbolic mirror through q whose tangent makes angle alpha with the
/// transported first axis: a conjugated coordinate reflection.
Isometry hyperbolic_mirror(const Model& m, const ModelPoint& q, double alpha) {
    Vec v = geo::log_map(geo::base_point(m), q);
    double d = geo::tangent_norm(geo::base_point(m), v);
    Isometry carry = geo::identity_isometry(m);
    if (d > 1e-14) {
        double phi = std::atan2(v(2), v(1));
        carry = geo::hyperboloid_rotation(m, 1, 2, phi)
                    .compose(geo::hyperboloid_boost(m, 1, d))
                    .compose(geo::hyperboloid_rotation(m, 1, 2, -phi));
    }
    Isometry mirror = geo::hyperboloid_rotation(m, 1, 2, alpha)
                          .compose(geo::hyperboloid_reflection(m, 2))
                          .compose(geo::hyperboloid_rotation(m, 1, 2, -alpha));
    return carry.compose(mirror).compose(carry.inverse());
}

/// Orthogonal matrix conjugated by the translation taking the origin to v.
Isometry conjugated_linear(const Mat& q, const Vec& v) {
    return {geo::euclidean(static_cast<int>(q.rows())), q, v - q * v};
}

Mat real_block(const rep::Mat& u) {
    int d = static_cast<int>(u.rows());
    Mat r = Mat::Zero(2 * d, 2 * d);
    r.topLeftCorner(d, d) = u.real();
    r.topRightCorner(d, d) = -u.imag();
    r.bottomLeftCorner(d, d) = u.imag();
    r.bottomRightCorner(d, d) = u.real();
    return r;
}

Mat plane_rotation(int dim, int i, int j, double theta) {
    Mat r = Mat::Identity(dim, dim);
    r(i, i) = std::cos(theta);
    r(j, j) = std::cos(theta);
    r(i, j) = -std::sin(theta);
    r(j, i) = std::sin(theta);
    return r;
}

void finish_scenario(Scenario& s, std::mt19937_64& rng, const ScenarioParams& params,
                     bool enumerate_full_group) {
    const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    for (int p = 0; p < 3; ++p) {
        std::vector<Isometry> gens = s.subgroup_gens[pairs[p].first];
        const auto& second = s.subgroup_gens[pairs[p].second];
        gens.insert(gens.end(), second.begin(), second.end());
        s.pair_elements[p] = geo::isometry_closure(gens, params.group_cap);
        s.pair_fixed[p] = geo::fixed_subspace(gens);
    }

    for (int i = 0; i < 3; ++i) {
        const auto& gens = s.subgroup_gens[i];
        s.generators.insert(s.generators.end(), gens.begin(), gens.end());
    }

    for (int p = 0; p < 3; ++p)
        for (const auto& e : s.pair_elements[p]) {
            bool seen = false;
            for (const auto& k : s.k_set)
                if (k.data_distance(e) <= 1e-8) {
                    seen = true;
                    break;
                }
            if (!seen) s.k_set.push_back(e);
        }

    if (enumerate_full_group)
        s.full_group = geo::isometry_closure(s.generators, params.group_cap);

    for (int p = 0; p < 3; ++p) {
        ModelPoint probe = random_model_point(rng, s.model, 1.0);
        s.initial[p] = geo::project(probe, s.pair_fixed[p]);
    }

    s.scale = 1.0;
    for (const auto& pt : s.initial)
        s.scale = std::max(s.scale, geo::dist(geo::origin(s.model), pt));
    if (s.planted_fixed_point)
        s.scale = std::max(s.scale, geo::dist(geo::origin(s.model), *s.planted_fixed_point));
}

Scenario make_mirrors(const ScenarioParams& params, std::mt19937_64& rng) {
    Scenario s;
    const Model& m = params.model;
    const double theta = params.mirror_angle;
    // Mirror angles 0, theta, 2*theta about a common point. Each pairwise
    // mirror angle must be a rational multiple of pi so the dihedral pair
    // groups close; the normals stay inside one 2-plane so the full group
    // is the planar dihedral group and stays enumerable.
    if (m.kind == Model::Kind::Euclidean) {
        if (m.dim < 2) throw ParameterError("mirror scenario needs dim >= 2");
        ModelPoint c = random_model_point(rng, m, 1.2);
        Mat frame = random_rotation(rng, m.dim);
        for (int i = 0; i < 3; ++i) {
            double alpha = i * theta;
            Vec normal = -std::sin(alpha) * frame.col(0) + std::cos(alpha) * frame.col(1);
            s.subgroup_gens[i].push_back(geo::euclidean_reflection(normal, c.coords));
        }
    } else {
        if (m.dim != 2) throw ParameterError("hyperbolic mirror scenario is planar");
        ModelPoint c = random_model_point(rng, m, 0.8);
        for (int i = 0; i < 3; ++i)
            s.subgroup_gens[i].push_back(hyperbolic_mirror(m, c, i * theta));
    }
    s.model = m;
    finish_scenario(s, rng, params, true);
    return s;
}

Scenario make_coboundary(const ScenarioParams& params, std::mt19937_64& rng) {
    if (params.model.kind != Model::Kind::Euclidean)
        throw ParameterError("coboundary scenarios are euclidean");
    const int dim = params.model.dim;
    Scenario s;
    s.model = params.model;
    Vec v = 1.2 * random_direction(rng, dim);

    if (dim == 2) {
        // Planar rotation action shared by all three subgroups; every
        // pairwise fixed set is exactly the planted point.
        Mat r = plane_rotation(2, 0, 1, 2 * kPi / 5);
        for (int i = 0; i < 3; ++i) s.subgroup_gens[i].push_back(conjugated_linear(r, v));
    } else {
        // Realified Heisenberg irrep block (no invariant vectors) plus one
        // rotation block per leftover coordinate pair, assigned to x or y
        // alternately so the joint action still has none while pairs
        // {1,3} and {2,3} keep nontrivial fixed subspaces.
        const int p = params.heisenberg_p;
        auto h = rep::heisenberg_group(p);
        auto irr = rep::heisenberg_irreps(h).back();
        const int block = 2 * p;
        if (dim < block + 2 || (dim - block) % 2 != 0)
            throw ParameterError("coboundary dimension must be 2p + 2m with m >= 1");
        Mat qx = Mat::Identity(dim, dim), qy = qx, qz = qx;
        qx.topLeftCorner(block, block) = real_block(irr.image(h.x_id));
        qy.topLeftCorner(block, block) = real_block(irr.image(h.y_id));
        qz.topLeftCorner(block, block) = real_block(irr.image(h.z_id));
        for (int off = block, idx = 0; off + 1 < dim; off += 2, ++idx) {
            Mat rot = plane_rotation(dim, off, off + 1, 2 * kPi / p);
            if (idx % 2 == 0)
                qy = qy * rot;
            else
                qx = qx * rot;
        }
        s.subgroup_gens[0].push_back(conjugated_linear(qx, v));
        s.subgroup_gens[1].push_back(conjugated_linear(qy, v));
        s.subgroup_gens[2].push_back(conjugated_linear(qz, v));
    }
    s.planted_fixed_point = ModelPoint{s.model, v};
    finish_scenario(s, rng, params, true);
    return s;
}

Scenario make_rep_embedded(const ScenarioParams& params, std::mt19937_64& rng) {
    if (params.model.kind != Model::Kind::Euclidean)
        throw ParameterError("rep-embedded scenarios are euclidean");
    const int p = params.heisenberg_p;
    auto h = rep::heisenberg_group(p);

    Scenario s;
    std::array<Mat, 3> images;
    if (params.model.dim == 2 * p) {
        auto irr = rep::heisenberg_irreps(h).back();
        images = {real_block(irr.image(h.x_id)), real_block(irr.image(h.y_id)),
                  real_block(irr.image(h.z_id))};
    } else if (params.model.dim == static_cast<int>(h.table->size())) {
        auto reg = rep::Representation::regular(h.table);
        images = {reg.dense_image(h.x_id).real(), reg.dense_image(h.y_id).real(),
                  reg.dense_image(h.z_id).real()};
    } else {
        throw ParameterError(
            "rep-embedded dimension must be 2p (irreducible) or p^3 (regular)");
    }
    s.model = geo::euclidean(params.model.dim);
    for (int i = 0; i < 3; ++i)
        s.subgroup_gens[i].push_back({s.model, images[i], Vec::Zero(params.model.dim)});
    finish_scenario(s, rng, params, true);
    return s;
}

Scenario make_stress(const ScenarioParams& params, std::mt19937_64& rng) {
    if (params.model.kind != Model::Kind::Euclidean || params.model.dim != 2)
        throw ParameterError("stress scenarios live in the euclidean plane");
    Scenario s;
    s.model = params.model;
    // Three parallel mirror lines: the constraint sets are disjoint, so f
    // is bounded away from zero by construction. The pairwise closures
    // <G_i, G_j> would be infinite translation groups; each constraint set
    // is taken directly as the fixed line of one reflection, which is the
    // out-of-hypothesis situation this kind exercises.
    std::uniform_real_distribution<double> u(0.4, 1.2);
    double g1 = u(rng), g2 = u(rng);
    Vec ey(2);
    ey << 0, 1;
    Vec a0(2), a1(2), a2(2);
    a0 << 0, 0;
    a1 << 0, g1;
    a2 << 0, -g2;
    s.subgroup_gens[0].push_back(geo::euclidean_reflection(ey, a0));
    s.subgroup_gens[1].push_back(geo::euclidean_reflection(ey, a1));
    s.subgroup_gens[2].push_back(geo::euclidean_reflection(ey, a2));

    for (int p = 0; p < 3; ++p) {
        s.pair_elements[p] = {geo::identity_isometry(s.model), s.subgroup_gens[p][0]};
        s.pair_fixed[p] = geo::fixed_subspace({s.subgroup_gens[p][0]});
    }
    for (int i = 0; i < 3; ++i) s.generators.push_back(s.subgroup_gens[i][0]);
    s.k_set = s.generators;
    s.k_set.push_back(geo::identity_isometry(s.model));
    for (int p = 0; p < 3; ++p) {
        ModelPoint probe = random_model_point(rng, s.model, 1.0);
        s.initial[p] = geo::project(probe, s.pair_fixed[p]);
    }
    s.scale = 1.0 + g1 + g2;
    return s;
}

void append_matrix(std::string& out, const Mat& m) {
    char buf[64];
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,", m(i, j));
            out += buf;
        }
}

void append_vector(std::string& out, const Vec& v) {
    char buf[64];
    for (int i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,", v(i));
        out += buf;
    }
}

}  // namespace

Scenario make_scenario(const ScenarioParams& params) {
    std::mt19937_64 rng(params.seed ^ 0x9e3779b97f4a7c15ull);
    Scenario s;
    switch (params.kind) {
        case ScenarioKind::Mirrors: s = make_mirrors(params, rng); break;
        case ScenarioKind::Coboundary: s = make_coboundary(params, rng); break;
        case ScenarioKind::RepEmbedded: s = make_rep_embedded(params, rng); break;
        case ScenarioKind::Stress: s = make_stress(params, rng); break;
    }
    s.kind = params.kind;
    s.seed = params.seed;
    s.max_iterations = params.max_iterations;

    for (int p = 0; p < 3; ++p)
        if (!geo::contains(s.pair_fixed[p], s.initial[p], 1e-8))
            throw NumericalFailure("initial triangle left its fixed set");
    return s;
}

std::string Scenario::serialize() const {
    std::string out = "scenario kind=" + scenario_kind_name(kind);
    out += " model=";
    out += model.kind == Model::Kind::Euclidean ? "euclidean" : "hyperboloid";
    char buf[96];
    std::snprintf(buf, sizeof buf, " dim=%d curvature=%.17g seed=%llu\n", model.dim,
                  model.curvature, static_cast<unsigned long long>(seed));
    out += buf;
    for (int i = 0; i < 3; ++i) {
        out += "G" + std::to_string(i + 1) + ":";
        for (const auto& iso : subgroup_gens[i]) {
            append_matrix(out, iso.linear);
            out += "|";
            if (iso.offset.size()) append_vector(out, iso.offset);
            out += ";";
        }
        out += "\n";
    }
    for (int i = 0; i < 3; ++i) {
        out += "x" + std::to_string(i) + ":";
        append_vector(out, initial[i].coords);
        out += "\n";
    }
    std::snprintf(buf, sizeof buf, "scale=%.17g k=%zu\n", scale, k_set.size());
    out += buf;
    if (planted_fixed_point) {
        out += "planted:";
        append_vector(out, planted_fixed_point->coords);
        out += "\n";
    }
    return out;
}

}  // namespace steinfix::sol
