#include "steinfix/rep/angles.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <map>

#include "steinfix/alg/steinberg.hpp"

namespace steinfix::rep {

namespace {

void check_orthonormal(const SubspaceBasis& b, double tol) {
    if (b.columns.cols() == 0) return;
    Mat g = b.columns.adjoint() * b.columns;
    double defect = (g - Mat::Identity(g.rows(), g.cols())).norm();
    if (defect > tol * std::max<double>(1.0, std::sqrt(static_cast<double>(g.rows()))))
        throw ParameterError("basis is not orthonormal (defect " + std::to_string(defect) + ")");
}

/// Shared epilogue: given the singular values of a cross-Gram matrix,
/// deflate the intersection and fill the report.
AngleReport report_from_singular_values(const Eigen::VectorXd& sv, int dim1, int dim2,
                                        double intersection_tol, AngleReport::Method method) {
    AngleReport rep;
    rep.method = method;
    rep.dim_v1 = dim1;
    rep.dim_v2 = dim2;
    int inter = 0;
    while (inter < sv.size() && sv(inter) >= 1.0 - intersection_tol) ++inter;
    rep.dim_intersection = inter;
    if (inter >= std::min(dim1, dim2) || inter == sv.size()) {
        rep.degenerate = true;
        rep.cosine = 0.0;
        rep.angle = kPi / 2;  // convention for an empty deflated space
    } else {
        rep.cosine = std::clamp(sv(inter), 0.0, 1.0);
        rep.angle = std::acos(rep.cosine);
    }
    rep.margin = rep.angle - kPi / 3;
    return rep;
}

std::vector<int> checked_subgroup(const alg::GroupTable& table, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty() || !table.is_subgroup(ids))
        throw ParameterError("element list is not closed under the table's multiplication");
    return ids;
}

/// Coset labels: cosets[x] = index of the coset H x; also returns the count.
std::pair<std::vector<int>, int> coset_labels(const alg::GroupTable& table,
                                              const std::vector<int>& subgroup) {
    const int n = static_cast<int>(table.size());
    std::vector<int> label(n, -1);
    int count = 0;
    for (int x = 0; x < n; ++x) {
        if (label[x] >= 0) continue;
        for (int h : subgroup) label[table.multiply(h, x)] = count;
        ++count;
    }
    return {label, count};
}

}  // namespace

AngleReport principal_angle(const SubspaceBasis& b1, const SubspaceBasis& b2,
                            double orthonormal_tol, double intersection_tol) {
    if (b1.ambient_dim != b2.ambient_dim)
        throw ParameterError("subspace bases live in different ambient dimensions");
    check_orthonormal(b1, orthonormal_tol);
    check_orthonormal(b2, orthonormal_tol);
    if (b1.dim() == 0 || b2.dim() == 0) {
        AngleReport rep;
        rep.dim_v1 = b1.dim();
        rep.dim_v2 = b2.dim();
        rep.degenerate = true;
        rep.angle = kPi / 2;
        rep.margin = rep.angle - kPi / 3;
        return rep;
    }
    Mat cross = b1.columns.adjoint() * b2.columns;
    Eigen::JacobiSVD<Mat> svd(cross);
    return report_from_singular_values(svd.singularValues(), b1.dim(), b2.dim(),
                                       intersection_tol, AngleReport::Method::Dense);
}

SubspaceBasis invariant_subspace(const Representation& rep,
                                 const std::vector<int>& subgroup_ids) {
    auto sub = checked_subgroup(rep.group(), subgroup_ids);
    SubspaceBasis basis;
    basis.ambient_dim = rep.dim();

    if (rep.kind() == Representation::Kind::RegularPermutation) {
        auto [label, count] = coset_labels(rep.group(), sub);
        const double inv_norm = 1.0 / std::sqrt(static_cast<double>(sub.size()));
        basis.columns = Mat::Zero(rep.dim(), count);
        for (int x = 0; x < rep.dim(); ++x) basis.columns(x, label[x]) = inv_norm;
        return basis;
    }

    Mat proj = Mat::Zero(rep.dim(), rep.dim());
    for (int h : sub) proj += rep.image(h);
    proj /= static_cast<double>(sub.size());
    // The averaging projector is Hermitian (the sum runs over a group).
    Eigen::SelfAdjointEigenSolver<Mat> eig((proj + proj.adjoint()) / 2.0);
    int rank = 0;
    for (int i = 0; i < rep.dim(); ++i)
        if (eig.eigenvalues()(i) > 0.5) ++rank;
    basis.columns = eig.eigenvectors().rightCols(rank);
    return basis;
}

AngleReport subgroup_angle(const alg::GroupTable& table, const std::vector<int>& h1,
                           const std::vector<int>& h2) {
    auto s1 = checked_subgroup(table, h1);
    auto s2 = checked_subgroup(table, h2);

    std::vector<int> joint = s1;
    joint.insert(joint.end(), s2.begin(), s2.end());
    if (table.subgroup_closure(joint).size() != table.size())
        throw ScopeError("subgroups do not generate the full table");

    auto [label1, count1] = coset_labels(table, s1);
    auto [label2, count2] = coset_labels(table, s2);

    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(count1, count2);
    for (int x = 0; x < static_cast<int>(table.size()); ++x)
        gram(label1[x], label2[x]) += 1.0;
    gram /= std::sqrt(static_cast<double>(s1.size()) * static_cast<double>(s2.size()));

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    auto rep = report_from_singular_values(svd.singularValues(), count1, count2, 1e-8,
                                           AngleReport::Method::Coset);
    return rep;
}

AngleReport irrep_angle(const Representation& rep, const std::vector<int>& h1,
                        const std::vector<int>& h2) {
    SubspaceBasis b1 = invariant_subspace(rep, h1);
    SubspaceBasis b2 = invariant_subspace(rep, h2);
    AngleReport out = principal_angle(b1, b2);
    out.method = rep.kind() == Representation::Kind::ExplicitUnitary
                     ? AngleReport::Method::ExplicitIrrep
                     : AngleReport::Method::Dense;
    return out;
}

AngleReport steinberg_pair_angle(int n, int k, int p, std::pair<int, int> pair,
                                 std::size_t cap) {
    auto gens = alg::steinberg_generators(n, k, p, n);
    alg::GroupTable table;
    try {
        table = alg::bfs_closure(gens.pair(pair.first, pair.second), cap);
    } catch (const CapExceeded& e) {
        throw CapExceeded(std::string(e.what()) +
                              "; consider lowering k or n for this pair",
                          e.last_frontier_size);
    }
    auto ids_of = [&](const std::vector<alg::GeneratorSpec>& family) {
        std::vector<int> ids;
        for (const auto& g : family) ids.push_back(table.id_of(g.matrix));
        return table.subgroup_closure(ids);
    };
    return subgroup_angle(table, ids_of(gens.family(pair.first)),
                          ids_of(gens.family(pair.second)));
}

FhCheckResult fh_inequality_check(const Representation& rep, const std::vector<int>& h1,
                                  const std::vector<int>& h2, const Vec& v, double tol) {
    if (v.size() != rep.dim()) throw ParameterError("vector dimension mismatch");
    auto s1 = checked_subgroup(rep.group(), h1);
    auto s2 = checked_subgroup(rep.group(), h2);
    std::vector<int> joint = s1;
    joint.insert(joint.end(), s2.begin(), s2.end());
    auto sjoint = rep.group().subgroup_closure(joint);

    auto dist_sq = [&](const std::vector<int>& sub) {
        SubspaceBasis b = invariant_subspace(rep, sub);
        Vec proj = b.columns * (b.columns.adjoint() * v);
        return (v - proj).squaredNorm();
    };
    FhCheckResult r;
    r.d0_sq = dist_sq(sjoint);
    r.d1_sq = dist_sq(s1);
    r.d2_sq = dist_sq(s2);
    r.holds = r.d0_sq <= tol || r.d0_sq < 2.0 * (r.d1_sq + r.d2_sq) + tol;
    return r;
}

AngleReport subgroup_angle_dense(const Representation& rep, const std::vector<int>& h1,
                                 const std::vector<int>& h2) {
    SubspaceBasis b1 = invariant_subspace(rep, h1);
    SubspaceBasis b2 = invariant_subspace(rep, h2);
    if (rep.kind() == Representation::Kind::RegularPermutation) {
        // Recompute the bases through dense projector algebra so this path
        // stays independent of the coset shortcut.
        auto make_dense = [&](const std::vector<int>& ids) {
            auto sub = rep.group().subgroup_closure(ids);
            Mat proj = Mat::Zero(rep.dim(), rep.dim());
            for (int h : sub) proj += rep.dense_image(h);
            proj /= static_cast<double>(sub.size());
            Eigen::SelfAdjointEigenSolver<Mat> eig((proj + proj.adjoint()) / 2.0);
            int rank = 0;
            for (int i = 0; i < rep.dim(); ++i)
                if (eig.eigenvalues()(i) > 0.5) ++rank;
            SubspaceBasis b;
            b.ambient_dim = rep.dim();
            b.columns = eig.eigenvectors().rightCols(rank);
            return b;
        };
        b1 = make_dense(h1);
        b2 = make_dense(h2);
    }
    AngleReport out = principal_angle(b1, b2);
    out.method = AngleReport::Method::Dense;
    return out;
}

}  // namespace steinfix::rep
