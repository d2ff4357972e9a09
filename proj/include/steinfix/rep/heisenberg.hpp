#pragma once

#include "steinfix/rep/angles.hpp"

namespace steinfix::rep {

/// The order-p^3 Heisenberg group as an enumerated table (the pair <G1,G2>
/// at n = 3), together with the ids of its three distinguished cyclic
/// subgroups <x>, <y> and the center <z> = <[x,y]>.
struct HeisenbergGroup {
    std::shared_ptr<const alg::GroupTable> table;
    std::vector<int> x_subgroup;
    std::vector<int> y_subgroup;
    std::vector<int> z_subgroup;
    int x_id = 0;
    int y_id = 0;
    int z_id = 0;
};

HeisenbergGroup heisenberg_group(int p);

/// Complete list of irreducible representations: p^2 one-dimensional
/// characters (factoring through H_p/<z>) followed by p-1 representations
/// of dimension p with pi(x) the cyclic shift and pi(y) diagonal in the
/// powers of a nontrivial p-th root of unity.
std::vector<Representation> heisenberg_irreps(int p);
std::vector<Representation> heisenberg_irreps(const HeisenbergGroup& group);

}  // namespace steinfix::rep
