#pragma once

#include "steinfix/alg/steinberg.hpp"
#include "steinfix/rep/representation.hpp"

namespace steinfix::rep {

/// Orthonormal spanning set of a subspace (columns).
struct SubspaceBasis {
    int ambient_dim = 0;
    Mat columns;  // ambient_dim x r, pairwise orthonormal to 1e-10

    int dim() const { return static_cast<int>(columns.cols()); }
};

/// Angle between two invariant subspaces after deflating their intersection.
struct AngleReport {
    enum class Method { Coset, Dense, ExplicitIrrep };

    double cosine = 0.0;   // in [0, 1]
    double angle = 0.0;    // radians; arccos(cosine) unless degenerate
    int dim_v1 = 0;
    int dim_v2 = 0;
    int dim_intersection = 0;
    bool degenerate = false;  // a deflated space was zero; angle = pi/2 by convention
    double margin = 0.0;      // angle - pi/3
    Method method = Method::Dense;
};

/// Angle between the subspaces spanned by two orthonormal bases: singular
/// values of the cross-Gram within intersection_tol of 1 are treated as
/// V1 cap V2 and deflated; the report's cosine is the next singular value.
AngleReport principal_angle(const SubspaceBasis& b1, const SubspaceBasis& b2,
                            double orthonormal_tol = 1e-10,
                            double intersection_tol = 1e-8);

/// Orthonormal basis of the fixed space of the averaging projector
/// (1/|H|) sum pi(h). For regular representations this is returned exactly
/// as the normalized indicator vectors of the cosets Hg.
SubspaceBasis invariant_subspace(const Representation& rep,
                                 const std::vector<int>& subgroup_ids);

/// Angle between two subgroups in the left-regular representation, computed
/// from the coset-intersection Gram matrix
///   M[a,b] = |H1 g_a  cap  H2 g_b| / sqrt(|H1| |H2|)
/// deflated against the all-constants direction. Requires <h1, h2> to be
/// the whole table; this equals the infimum over all unitary
/// representations since every irreducible occurs in the regular one and
/// the angle over a direct sum is the minimum over summands.
AngleReport subgroup_angle(const alg::GroupTable& table, const std::vector<int>& h1,
                           const std::vector<int>& h2);

/// Angle between the invariant subspaces of h1 and h2 inside one explicit
/// representation.
AngleReport irrep_angle(const Representation& rep, const std::vector<int>& h1,
                        const std::vector<int>& h2);

/// Angle for the Steinberg pair G_{i,j} enumerated at (n, k, p), degree cap
/// D = n. The margin field carries angle - pi/3.
AngleReport steinberg_pair_angle(int n, int k, int p, std::pair<int, int> pair,
                                 std::size_t cap = alg::kDefaultClosureCap);

/// Squared distances of v to the joint and single invariant subspaces and
/// the strict-inequality flag of d0^2 < 2 (d1^2 + d2^2).
struct FhCheckResult {
    double d0_sq = 0.0;
    double d1_sq = 0.0;
    double d2_sq = 0.0;
    bool holds = false;
};

FhCheckResult fh_inequality_check(const Representation& rep, const std::vector<int>& h1,
                                  const std::vector<int>& h2, const Vec& v,
                                  double tol = 1e-12);

/// Test oracle: dense averaging projectors over full representation
/// matrices, eigendecomposed; same deflation convention as principal_angle.
AngleReport subgroup_angle_dense(const Representation& rep, const std::vector<int>& h1,
                                 const std::vector<int>& h2);

}  // namespace steinfix::rep
