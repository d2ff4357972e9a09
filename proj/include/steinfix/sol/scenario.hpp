#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "steinfix/geo/centers.hpp"
#include "steinfix/geo/fixed_sets.hpp"

namespace steinfix::sol {

enum class ScenarioKind { Mirrors, Coboundary, RepEmbedded, Stress };

ScenarioKind scenario_kind_from_name(const std::string& name);
std::string scenario_kind_name(ScenarioKind kind);

struct ScenarioParams {
    ScenarioKind kind = ScenarioKind::Mirrors;
    geo::Model model = geo::euclidean(2);
    std::uint64_t seed = 0;
    /// Pairwise mirror angle for the mirrors kind (radians). Must be a
    /// rational multiple of pi for the dihedral pair groups to close.
    double mirror_angle = 70.0 * kPi / 180.0;
    /// Source group parameter for coboundary / rep-embedded kinds.
    int heisenberg_p = 2;
    int max_iterations = 10000;
    std::size_t group_cap = 4096;
};

/// A finite-group isometric action split into three subgroup generator
/// lists, with the derived pairwise groups, their fixed sets, the
/// symmetric set K, and a deterministic initial triangle.
struct Scenario {
    ScenarioKind kind = ScenarioKind::Mirrors;
    geo::Model model = geo::euclidean(2);
    std::uint64_t seed = 0;
    int max_iterations = 10000;

    std::array<std::vector<geo::Isometry>, 3> subgroup_gens;  // G1, G2, G3
    /// Pairwise groups in the order G_{1,2}, G_{1,3}, G_{2,3}.
    std::array<std::vector<geo::Isometry>, 3> pair_elements;
    std::array<geo::GeodesicSubspace, 3> pair_fixed;
    std::vector<geo::Isometry> generators;  // union of the three lists
    std::vector<geo::Isometry> k_set;       // K = K1 u K2 u K3, deduplicated
    std::vector<geo::Isometry> full_group;  // empty when <G1,G2,G3> is not enumerable
    std::array<geo::ModelPoint, 3> initial;  // (x, y, z) on the three fixed sets
    double scale = 1.0;
    std::optional<geo::ModelPoint> planted_fixed_point;  // coboundary ground truth

    double fixed_point_tol() const { return 1e-12 * (1.0 + scale * scale); }
    /// Deterministic byte dump (same params + seed => identical bytes).
    std::string serialize() const;
};

Scenario make_scenario(const ScenarioParams& params);

}  // namespace steinfix::sol
