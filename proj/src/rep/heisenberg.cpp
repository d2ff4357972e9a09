#include "steinfix/rep/heisenberg.hpp"

#include <cmath>

#include "steinfix/alg/steinberg.hpp"

namespace steinfix::rep {

HeisenbergGroup heisenberg_group(int p) {
    auto gens = alg::steinberg_generators(3, 1, p, 3);
    HeisenbergGroup h;
    h.table = std::make_shared<alg::GroupTable>(
        alg::bfs_closure(gens.pair(1, 2), alg::kDefaultClosureCap));
    const auto& t = *h.table;
    // Generators are label-sorted: x[1,2](1) before x[2,3](1).
    h.x_id = t.generator_element(0);
    h.y_id = t.generator_element(1);
    // z = [x,y] = x^{-1} y^{-1} x y generates the center.
    h.z_id = t.multiply(t.multiply(t.inverse(h.x_id), t.inverse(h.y_id)),
                        t.multiply(h.x_id, h.y_id));
    h.x_subgroup = t.subgroup_closure({h.x_id});
    h.y_subgroup = t.subgroup_closure({h.y_id});
    h.z_subgroup = t.subgroup_closure({h.z_id});
    return h;
}

std::vector<Representation> heisenberg_irreps(int p) {
    return heisenberg_irreps(heisenberg_group(p));
}

std::vector<Representation> heisenberg_irreps(const HeisenbergGroup& group) {
    const int p = static_cast<int>(std::lround(std::cbrt(static_cast<double>(group.table->size()))));
    std::vector<Representation> irreps;
    irreps.reserve(static_cast<std::size_t>(p) * p + p - 1);

    auto root = [&](int power) {
        double arg = 2.0 * kPi * power / p;
        return Cplx(std::cos(arg), std::sin(arg));
    };

    // p^2 characters chi_{a,b}: x -> w^a, y -> w^b (trivial on the center).
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            Mat mx(1, 1), my(1, 1);
            mx(0, 0) = root(a);
            my(0, 0) = root(b);
            irreps.push_back(Representation::unitary(group.table, {mx, my}));
        }

    // p-1 irreducibles of dimension p: the shift and the diagonal character.
    for (int s = 1; s < p; ++s) {
        Mat shift = Mat::Zero(p, p);
        for (int i = 0; i < p; ++i) shift((i + 1) % p, i) = 1.0;
        Mat diag = Mat::Zero(p, p);
        for (int i = 0; i < p; ++i) diag(i, i) = root(s * i);
        irreps.push_back(Representation::unitary(group.table, {shift, diag}));
    }
    return irreps;
}

}  // namespace steinfix::rep
