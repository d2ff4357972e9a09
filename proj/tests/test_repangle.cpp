#include "doctest.h"

#include <cmath>
#include <memory>
#include <random>

#include "steinfix/rep/heisenberg.hpp"

using namespace steinfix;
using namespace steinfix::rep;
using alg::GeneratorSpec;
using alg::GroupTable;
using alg::RingMatrix;
using alg::TruncatedPoly;

namespace {

std::shared_ptr<const GroupTable> trivial_table() {
    auto id = RingMatrix::identity(1, 2, 0, 0);
    return std::make_shared<GroupTable>(alg::bfs_closure({{id, "e"}}, 4));
}

std::shared_ptr<const GroupTable> z2_table() {
    auto one = TruncatedPoly::constant(2, 0, 1, 1);
    return std::make_shared<GroupTable>(
        alg::bfs_closure({{RingMatrix::elementary(2, 1, 2, one), "a"}}, 4));
}

// S3 as 3x3 permutation matrices over F_2: two adjacent transpositions.
std::shared_ptr<const GroupTable> s3_table() {
    auto one = TruncatedPoly::constant(2, 0, 0, 1);
    RingMatrix r1(3, 2, 0, 0), r2(3, 2, 0, 0);
    r1.set(0, 1, one); r1.set(1, 0, one); r1.set(2, 2, one);
    r2.set(0, 0, one); r2.set(1, 2, one); r2.set(2, 1, one);
    return std::make_shared<GroupTable>(alg::bfs_closure({{r1, "r1"}, {r2, "r2"}}, 16));
}

SubspaceBasis span_of(int ambient, std::vector<Eigen::VectorXcd> cols) {
    SubspaceBasis b;
    b.ambient_dim = ambient;
    b.columns = Mat::Zero(ambient, static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) b.columns.col(static_cast<int>(i)) = cols[i];
    return b;
}

}  // namespace

TEST_CASE("regular representation basics") {
    auto triv = Representation::regular(trivial_table());
    CHECK(triv.dim() == 1);
    CHECK(triv.permutation(0) == std::vector<int>{0});

    auto z2 = Representation::regular(z2_table());
    CHECK(z2.dim() == 2);
    CHECK(z2.permutation(1) == std::vector<int>{1, 0});

    auto h3 = Representation::regular(
        std::make_shared<GroupTable>(*heisenberg_group(3).table));
    CHECK(h3.dim() == 27);
}

TEST_CASE("homomorphism property on sampled pairs") {
    auto h = heisenberg_group(3);
    auto reg = Representation::regular(h.table);
    auto irreps = heisenberg_irreps(h);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(h.table->size()) - 1);
    for (int trial = 0; trial < 50; ++trial) {
        int a = pick(rng), b = pick(rng);
        int ab = h.table->multiply(a, b);
        const auto& pa = reg.permutation(a);
        const auto& pb = reg.permutation(b);
        const auto& pab = reg.permutation(ab);
        for (int x = 0; x < reg.dim(); ++x) CHECK(pab[x] == pa[pb[x]]);
        const auto& irr = irreps.back();
        CHECK((irr.image(ab) - irr.image(a) * irr.image(b)).norm() < 1e-10);
    }
}

TEST_CASE("invariant subspace of the regular representation") {
    auto z2 = Representation::regular(z2_table());
    auto whole = invariant_subspace(z2, {0, 1});
    REQUIRE(whole.dim() == 1);
    CHECK(std::abs(whole.columns(0, 0) - whole.columns(1, 0)) < 1e-12);
    CHECK(std::abs(std::abs(whole.columns(0, 0)) - 1.0 / std::sqrt(2.0)) < 1e-12);

    auto full = invariant_subspace(z2, {0});
    CHECK(full.dim() == 2);

    auto h3 = heisenberg_group(3);
    auto reg = Representation::regular(h3.table);
    auto fixed = invariant_subspace(reg, h3.x_subgroup);
    CHECK(fixed.dim() == 9);  // [G : <x>] = 27 / 3

    // Oracle: projector rank by dense eigencount.
    Mat proj = Mat::Zero(reg.dim(), reg.dim());
    for (int hid : h3.x_subgroup) proj += reg.dense_image(hid);
    proj /= static_cast<double>(h3.x_subgroup.size());
    Eigen::SelfAdjointEigenSolver<Mat> eig((proj + proj.adjoint()) / 2.0);
    int rank = 0;
    for (int i = 0; i < reg.dim(); ++i)
        if (eig.eigenvalues()(i) > 0.5) ++rank;
    CHECK(rank == 9);

    // Projector idempotence.
    CHECK((proj * proj - proj).norm() < 1e-10);
}

TEST_CASE("invariant subspace rejects non-closed input") {
    auto h3 = heisenberg_group(3);
    auto reg = Representation::regular(h3.table);
    CHECK_THROWS_AS(invariant_subspace(reg, {0, h3.x_id}), ParameterError);
}

TEST_CASE("principal angle on explicit spans") {
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(2), e2 = Eigen::VectorXcd::Zero(2);
    e1(0) = 1.0;
    e2(1) = 1.0;

    auto orth = principal_angle(span_of(2, {e1}), span_of(2, {e2}));
    CHECK(orth.angle == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK_FALSE(orth.degenerate);

    Eigen::VectorXcd diag = (e1 + e2) / std::sqrt(2.0);
    auto fortyfive = principal_angle(span_of(2, {e1}), span_of(2, {diag}));
    CHECK(fortyfive.angle == doctest::Approx(kPi / 4).epsilon(1e-12));

    auto same = principal_angle(span_of(2, {e1}), span_of(2, {e1}));
    CHECK(same.degenerate);
    CHECK(same.angle == doctest::Approx(kPi / 2));
    CHECK(same.dim_intersection == 1);

    // Non-orthonormal input is rejected.
    auto bad = span_of(2, {e1 * 2.0});
    CHECK_THROWS_AS(principal_angle(bad, span_of(2, {e2})), ParameterError);
}

TEST_CASE("subgroup angle of the Heisenberg pair") {
    auto h5 = heisenberg_group(5);
    auto rep5 = subgroup_angle(*h5.table, h5.x_subgroup, h5.y_subgroup);
    CHECK(rep5.cosine == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-10));
    CHECK(rep5.angle == doctest::Approx(1.1071487177940904).epsilon(1e-9));
    CHECK(rep5.margin > 0);
    CHECK(rep5.dim_intersection == 1);

    auto h3 = heisenberg_group(3);
    auto rep3 = subgroup_angle(*h3.table, h3.x_subgroup, h3.y_subgroup);
    CHECK(rep3.cosine == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
    CHECK(rep3.angle == doctest::Approx(0.9553166181245093).epsilon(1e-9));
    CHECK(rep3.margin < 0);
}

TEST_CASE("subgroup angle scope check") {
    auto h3 = heisenberg_group(3);
    // <x> and <z> generate an abelian proper subgroup, not the whole table.
    CHECK_THROWS_AS(subgroup_angle(*h3.table, h3.x_subgroup, h3.z_subgroup), ScopeError);
}

TEST_CASE("dihedral group of order 6: angle pi/3, coset matches dense") {
    auto s3 = s3_table();
    REQUIRE(s3->size() == 6);
    std::vector<int> h1 = s3->subgroup_closure({s3->generator_element(0)});
    std::vector<int> h2 = s3->subgroup_closure({s3->generator_element(1)});
    auto coset = subgroup_angle(*s3, h1, h2);
    CHECK(coset.angle == doctest::Approx(kPi / 3).epsilon(1e-10));

    auto reg = Representation::regular(s3);
    auto dense = subgroup_angle_dense(reg, h1, h2);
    CHECK(std::abs(dense.cosine - coset.cosine) < 1e-10);
    CHECK(std::abs(dense.angle - coset.angle) < 1e-10);
}

TEST_CASE("oracle equivalence for small groups") {
    for (int p : {2, 3}) {
        auto h = heisenberg_group(p);
        REQUIRE(h.table->size() <= 64);
        auto coset = subgroup_angle(*h.table, h.x_subgroup, h.y_subgroup);
        auto reg = Representation::regular(h.table);
        auto dense = subgroup_angle_dense(reg, h.x_subgroup, h.y_subgroup);
        CHECK(std::abs(dense.cosine - coset.cosine) < 1e-10);
    }
}

TEST_CASE("heisenberg irrep inventory") {
    auto irreps5 = heisenberg_irreps(5);
    int ones = 0, fives = 0;
    for (const auto& r : irreps5) {
        if (r.dim() == 1) ++ones;
        if (r.dim() == 5) ++fives;
    }
    CHECK(ones == 25);
    CHECK(fives == 4);

    for (int p : {3, 5, 7}) {
        auto irreps = heisenberg_irreps(p);
        long long sum = 0;
        for (const auto& r : irreps) sum += static_cast<long long>(r.dim()) * r.dim();
        CHECK(sum == static_cast<long long>(p) * p * p);
    }
}

TEST_CASE("heisenberg irreps pairwise distinct by character orthogonality") {
    auto h = heisenberg_group(3);
    auto irreps = heisenberg_irreps(h);
    const int n = static_cast<int>(h.table->size());
    std::vector<Eigen::VectorXcd> chars;
    for (const auto& r : irreps) {
        Eigen::VectorXcd chi(n);
        for (int id = 0; id < n; ++id) chi(id) = r.image(id).trace();
        chars.push_back(chi);
    }
    for (std::size_t a = 0; a < chars.size(); ++a)
        for (std::size_t b = 0; b < chars.size(); ++b) {
            Cplx ip = chars[a].dot(chars[b]) / static_cast<double>(n);
            double expect = a == b ? 1.0 : 0.0;
            CHECK(std::abs(ip - Cplx(expect, 0)) < 1e-10);
        }
}

TEST_CASE("irrep angle inside explicit representations") {
    auto h5 = heisenberg_group(5);
    auto irreps = heisenberg_irreps(h5);

    auto pdim = irreps.back();
    auto rep = irrep_angle(pdim, h5.x_subgroup, h5.y_subgroup);
    CHECK(rep.cosine == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-10));
    CHECK_FALSE(rep.degenerate);

    auto onedim = irrep_angle(irreps[0], h5.x_subgroup, h5.y_subgroup);
    CHECK(onedim.degenerate);

    auto h7 = heisenberg_group(7);
    auto irreps7 = heisenberg_irreps(h7);
    auto rep7 = irrep_angle(irreps7.back(), h7.x_subgroup, h7.y_subgroup);
    CHECK(rep7.angle == doctest::Approx(std::acos(1.0 / std::sqrt(7.0))).epsilon(1e-10));
    auto full7 = subgroup_angle(*h7.table, h7.x_subgroup, h7.y_subgroup);
    CHECK(std::abs(rep7.cosine - full7.cosine) < 1e-9);
}

TEST_CASE("heisenberg exactness: irrep minimum equals the table angle") {
    for (int p : {3, 5, 7}) {
        auto h = heisenberg_group(p);
        auto irreps = heisenberg_irreps(h);
        double min_angle = kPi;
        for (std::size_t i = 1; i < irreps.size(); ++i) {  // skip the trivial character
            auto rep = irrep_angle(irreps[i], h.x_subgroup, h.y_subgroup);
            min_angle = std::min(min_angle, rep.angle);
        }
        auto table_angle = subgroup_angle(*h.table, h.x_subgroup, h.y_subgroup);
        CHECK(std::abs(min_angle - table_angle.angle) < 1e-9);
        CHECK(std::abs(std::cos(min_angle) - 1.0 / std::sqrt(static_cast<double>(p))) < 1e-9);
    }
}

TEST_CASE("direct sum minimality") {
    auto h5 = heisenberg_group(5);
    auto irreps = heisenberg_irreps(h5);
    const auto& trivial = irreps[0];       // chi_{0,0}
    const auto& chi10 = irreps[5];         // a=1, b=0
    const auto& pdim = irreps.back();

    auto angle_of = [&](const Representation& r) {
        return irrep_angle(r, h5.x_subgroup, h5.y_subgroup);
    };
    double pdim_angle = angle_of(pdim).angle;

    auto sum1 = direct_sum(trivial, pdim);
    CHECK(std::abs(angle_of(sum1).angle - pdim_angle) < 1e-10);

    auto sum2 = direct_sum(chi10, pdim);
    CHECK(std::abs(angle_of(sum2).angle - pdim_angle) < 1e-10);
}

TEST_CASE("complexification neutrality") {
    auto h5 = heisenberg_group(5);
    auto pdim = heisenberg_irreps(h5).back();
    auto real = realify(pdim);
    CHECK(real.dim() == 10);
    auto a = irrep_angle(pdim, h5.x_subgroup, h5.y_subgroup);
    auto b = irrep_angle(real, h5.x_subgroup, h5.y_subgroup);
    CHECK(std::abs(a.cosine - b.cosine) < 1e-10);
}

TEST_CASE("steinberg pair angles") {
    auto pair12 = steinberg_pair_angle(3, 1, 5, {1, 2});
    CHECK(pair12.margin > 0);
    CHECK(pair12.angle == doctest::Approx(1.1071487177940904).epsilon(1e-9));

    auto pair12_p3 = steinberg_pair_angle(3, 1, 3, {1, 2});
    CHECK(pair12_p3.margin < 0);

    // {1,3} and {2,3} are measured, not asserted against any closed form.
    auto pair13 = steinberg_pair_angle(3, 1, 5, {1, 3});
    auto pair23 = steinberg_pair_angle(3, 1, 5, {2, 3});
    CHECK(pair13.cosine >= 0.0);
    CHECK(pair13.cosine < 1.0);
    CHECK(pair23.cosine >= 0.0);
    CHECK(pair23.cosine < 1.0);
    CHECK_FALSE(pair13.degenerate);
    CHECK_FALSE(pair23.degenerate);
}

TEST_CASE("fh inequality check") {
    auto h5 = heisenberg_group(5);
    auto reg = Representation::regular(h5.table);

    // Jointly invariant vector: d0 = 0, holds trivially.
    Vec ones = Vec::Constant(reg.dim(), Cplx(1.0, 0.0));
    auto inv = fh_inequality_check(reg, h5.x_subgroup, h5.y_subgroup, ones);
    CHECK(inv.d0_sq < 1e-12);
    CHECK(inv.holds);

    // p = 5, p-dimensional irrep, v = e1: explicit projections give
    // d0^2 = 1, d1^2 = 1 - 1/5, d2^2 = 0.
    auto pdim = heisenberg_irreps(h5).back();
    Vec e1 = Vec::Zero(5);
    e1(0) = 1.0;
    auto r = fh_inequality_check(pdim, h5.x_subgroup, h5.y_subgroup, e1);
    CHECK(r.d0_sq == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.d1_sq == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(r.d2_sq == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(r.holds);
    CHECK(2.0 * (r.d1_sq + r.d2_sq) - r.d0_sq == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("fh worst vector via eigenvalue computation") {
    // Worst v maximizes d0^2 - 2(d1^2 + d2^2) = -3 + 2 v^H (P1 + P2) v over
    // the unit sphere of the p-dimensional irrep; the top eigenvector gives
    // slack 1 - 2/sqrt(p): negative at p = 3, positive at p = 5.
    for (int p : {3, 5}) {
        auto h = heisenberg_group(p);
        auto pdim = heisenberg_irreps(h).back();
        auto b1 = invariant_subspace(pdim, h.x_subgroup);
        auto b2 = invariant_subspace(pdim, h.y_subgroup);
        Mat proj = b1.columns * b1.columns.adjoint() + b2.columns * b2.columns.adjoint();
        Eigen::SelfAdjointEigenSolver<Mat> eig(proj);
        Vec worst = eig.eigenvectors().col(pdim.dim() - 1);
        auto r = fh_inequality_check(pdim, h.x_subgroup, h.y_subgroup, worst);
        double slack = 2.0 * (r.d1_sq + r.d2_sq) - r.d0_sq;
        CHECK(slack == doctest::Approx(1.0 - 2.0 / std::sqrt(static_cast<double>(p)))
                           .epsilon(1e-9));
        CHECK(r.holds == (p >= 5));
    }
}

TEST_CASE("explicit images stay unitary along words") {
    auto h5 = heisenberg_group(5);
    auto pdim = heisenberg_irreps(h5).back();
    for (int id = 0; id < static_cast<int>(h5.table->size()); id += 7) {
        const Mat& u = pdim.image(id);
        CHECK((u.adjoint() * u - Mat::Identity(5, 5)).norm() < 1e-10);
    }
}
