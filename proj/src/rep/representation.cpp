#include "steinfix/rep/representation.hpp"

namespace steinfix::rep {

Representation Representation::regular(std::shared_ptr<const alg::GroupTable> group,
                                       std::size_t cap) {
    if (group->size() > cap)
        throw ParameterError("group of order " + std::to_string(group->size()) +
                             " exceeds the regular-representation cap " + std::to_string(cap));
    Representation r;
    r.kind_ = Kind::RegularPermutation;
    r.group_ = std::move(group);
    r.dim_ = static_cast<int>(r.group_->size());
    r.permutations_.resize(r.group_->size());
    for (int g = 0; g < r.dim_; ++g) {
        auto& perm = r.permutations_[g];
        perm.resize(r.dim_);
        for (int x = 0; x < r.dim_; ++x) perm[x] = r.group_->multiply(g, x);
    }
    return r;
}

Representation Representation::unitary(std::shared_ptr<const alg::GroupTable> group,
                                       std::vector<Mat> generator_images,
                                       double unitary_tol) {
    if (static_cast<int>(generator_images.size()) != group->generator_count())
        throw ParameterError("need one image per table generator");
    Representation r;
    r.kind_ = Kind::ExplicitUnitary;
    r.group_ = std::move(group);
    r.dim_ = generator_images.empty() ? 1 : static_cast<int>(generator_images[0].rows());
    for (const auto& m : generator_images) {
        if (m.rows() != r.dim_ || m.cols() != r.dim_)
            throw ParameterError("generator images differ in dimension");
        double defect = (m.adjoint() * m - Mat::Identity(r.dim_, r.dim_)).norm();
        if (defect > unitary_tol)
            throw ParameterError("generator image is not unitary (defect " +
                                 std::to_string(defect) + ")");
    }
    r.generator_images_ = std::move(generator_images);
    r.images_.resize(r.group_->size());
    r.have_image_.assign(r.group_->size(), 0);
    r.images_[0] = Mat::Identity(r.dim_, r.dim_);
    r.have_image_[0] = 1;
    return r;
}

const std::vector<int>& Representation::permutation(int id) const {
    if (kind_ != Kind::RegularPermutation)
        throw ParameterError("permutation() is only defined for regular representations");
    return permutations_[id];
}

const Mat& Representation::image(int id) const {
    if (kind_ != Kind::ExplicitUnitary)
        throw ParameterError("image() is only defined for explicit representations");
    if (!have_image_[id]) {
        // Resolve the BFS chain down to a cached prefix, then extend forward.
        std::vector<int> chain;
        int cur = id;
        while (!have_image_[cur]) {
            chain.push_back(cur);
            cur = group_->parent(cur);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            int node = *it;
            images_[node] = images_[group_->parent(node)] *
                            generator_images_[group_->last_generator(node)];
            have_image_[node] = 1;
        }
    }
    return images_[id];
}

Mat Representation::dense_image(int id) const {
    if (kind_ == Kind::ExplicitUnitary) return image(id);
    const auto& perm = permutations_[id];
    Mat m = Mat::Zero(dim_, dim_);
    for (int x = 0; x < dim_; ++x) m(perm[x], x) = 1.0;
    return m;
}

Representation realify(const Representation& rep) {
    if (rep.kind() != Representation::Kind::ExplicitUnitary)
        throw ParameterError("realify expects an explicit unitary representation");
    const auto& g = rep.group();
    std::vector<Mat> images;
    images.reserve(g.generator_count());
    for (int i = 0; i < g.generator_count(); ++i) {
        const Mat& u = rep.image(g.generator_element(i));
        int d = static_cast<int>(u.rows());
        Mat r = Mat::Zero(2 * d, 2 * d);
        r.topLeftCorner(d, d) = u.real().cast<Cplx>();
        r.topRightCorner(d, d) = (-u.imag()).cast<Cplx>();
        r.bottomLeftCorner(d, d) = u.imag().cast<Cplx>();
        r.bottomRightCorner(d, d) = u.real().cast<Cplx>();
        images.push_back(std::move(r));
    }
    return Representation::unitary(rep.group_ptr(), std::move(images));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.group_ptr() != b.group_ptr())
        throw ParameterError("direct sum needs representations of the same table");
    const auto& g = a.group();
    std::vector<Mat> images;
    for (int i = 0; i < g.generator_count(); ++i) {
        const Mat& u = a.image(g.generator_element(i));
        const Mat& v = b.image(g.generator_element(i));
        Mat m = Mat::Zero(u.rows() + v.rows(), u.cols() + v.cols());
        m.topLeftCorner(u.rows(), u.cols()) = u;
        m.bottomRightCorner(v.rows(), v.cols()) = v;
        images.push_back(std::move(m));
    }
    return Representation::unitary(a.group_ptr(), std::move(images));
}

}  // namespace steinfix::rep
