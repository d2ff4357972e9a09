#include "steinfix/sol/fh.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace steinfix::sol {

using geo::Mat;
using geo::Vec;

AffineMinimizeResult fh_affine_minimize(const std::array<geo::GeodesicSubspace, 3>& fixed_sets) {
    const int d = fixed_sets[0].model.dim;
    for (const auto& s : fixed_sets)
        if (s.model.kind != geo::Model::Kind::Euclidean || s.model.dim != d)
            throw ParameterError("affine minimization needs euclidean fixed sets of one dimension");

    Mat stacked(3 * d, d);
    Vec rhs(3 * d);
    for (int p = 0; p < 3; ++p) {
        const auto& s = fixed_sets[p];
        Mat residual = Mat::Identity(d, d) - s.directions * s.directions.transpose();
        stacked.middleRows(p * d, d) = residual;
        rhs.segment(p * d, d) = residual * s.base;
    }
    AffineMinimizeResult r;
    r.minimizer = stacked.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(rhs);
    r.value = (stacked * r.minimizer - rhs).squaredNorm();
    return r;
}

AffineMinimizeResult fh_affine_minimize(
    const std::array<std::vector<geo::Isometry>, 3>& actions) {
    std::array<geo::GeodesicSubspace, 3> fixed_sets = {
        geo::fixed_subspace(actions[0]), geo::fixed_subspace(actions[1]),
        geo::fixed_subspace(actions[2])};
    return fh_affine_minimize(fixed_sets);
}

namespace {

double point_segment_dist_sq(const Vec& q, const Vec& a, const Vec& b) {
    Vec ab = b - a;
    double nn = ab.squaredNorm();
    double t = nn <= 0 ? 0.0 : std::clamp((q - a).dot(ab) / nn, 0.0, 1.0);
    return (q - (a + t * ab)).squaredNorm();
}

}  // namespace

BarycenterInequalityRecord barycenter_inequality_check(const Vec& x, const Vec& y,
                                                       const Vec& z) {
    if (x.size() != y.size() || x.size() != z.size())
        throw ParameterError("triangle vertices have mismatched dimension");
    Vec q = (x + y + z) / 3.0;
    BarycenterInequalityRecord rec;
    const Vec* v[3] = {&x, &y, &z};
    const Vec* opp[3][2] = {{&y, &z}, {&x, &z}, {&x, &y}};
    rec.min_slack = std::numeric_limits<double>::infinity();
    double scale = std::max({1.0, x.squaredNorm(), y.squaredNorm(), z.squaredNorm()});
    for (int i = 0; i < 3; ++i) {
        rec.vertex_d_sq[i] = (q - *v[i]).squaredNorm();
        rec.segment_d_sq[i] = point_segment_dist_sq(q, *opp[i][0], *opp[i][1]);
        rec.min_slack = std::min(rec.min_slack,
                                 rec.vertex_d_sq[i] - 4.0 * rec.segment_d_sq[i]);
    }
    rec.ok = rec.min_slack >= -1e-12 * scale;
    return rec;
}

}  // namespace steinfix::sol
