#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "steinfix/alg/group.hpp"
#include "steinfix/common.hpp"

namespace steinfix::rep {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Representation of an enumerated group: either the left-regular
/// permutation action on the group itself, or an explicit unitary
/// representation given by generator images and extended along the stored
/// BFS words on demand.
class Representation {
public:
    enum class Kind { RegularPermutation, ExplicitUnitary };

    static Representation regular(std::shared_ptr<const alg::GroupTable> group,
                                  std::size_t cap = 4096);
    static Representation unitary(std::shared_ptr<const alg::GroupTable> group,
                                  std::vector<Mat> generator_images,
                                  double unitary_tol = 1e-10);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    const alg::GroupTable& group() const { return *group_; }
    std::shared_ptr<const alg::GroupTable> group_ptr() const { return group_; }

    /// Left-multiplication permutation of element id: position x maps to g*x.
    const std::vector<int>& permutation(int id) const;
    /// Unitary image of element id (lazy; follows the BFS parent chain).
    const Mat& image(int id) const;
    /// Dense matrix image in either kind (permutation matrices for regular).
    Mat dense_image(int id) const;

private:
    Representation() = default;

    Kind kind_ = Kind::RegularPermutation;
    int dim_ = 0;
    std::shared_ptr<const alg::GroupTable> group_;
    std::vector<std::vector<int>> permutations_;       // regular
    std::vector<Mat> generator_images_;                // unitary
    mutable std::vector<Mat> images_;                  // unitary cache
    mutable std::vector<char> have_image_;
};

/// Realification of a unitary representation: each generator image U + iV
/// becomes the orthogonal block matrix [U -V; V U] of twice the dimension.
Representation realify(const Representation& rep);

/// Direct sum of two unitary representations of the same group.
Representation direct_sum(const Representation& a, const Representation& b);

}  // namespace steinfix::rep
