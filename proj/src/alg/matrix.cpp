#include "steinfix/alg/matrix.hpp"

#include <sstream>

namespace steinfix::alg {

RingMatrix::RingMatrix(int n, int p, int k, int degree_cap)
    : n_(n), p_(p), k_(k), cap_(degree_cap),
      entries_(static_cast<std::size_t>(n) * n, TruncatedPoly(p, k, degree_cap)) {
    if (n < 1) throw ParameterError("matrix dimension must be positive");
}

RingMatrix RingMatrix::identity(int n, int p, int k, int degree_cap) {
    RingMatrix m(n, p, k, degree_cap);
    for (int i = 0; i < n; ++i)
        m.entries_[static_cast<std::size_t>(i) * n + i] =
            TruncatedPoly::constant(p, k, degree_cap, 1);
    return m;
}

RingMatrix RingMatrix::elementary(int n, int i, int j, const TruncatedPoly& r) {
    if (i < 1 || j < 1 || i > n || j > n)
        throw ParameterError("elementary indices out of range");
    if (i == j) throw ParameterError("elementary matrix requires i != j");
    RingMatrix m = identity(n, r.modulus(), r.vars(), r.degree_cap());
    m.set(i - 1, j - 1, r);
    return m;
}

const TruncatedPoly& RingMatrix::at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
}

void RingMatrix::set(int i, int j, const TruncatedPoly& v) {
    if (v.modulus() != p_ || v.vars() != k_ || v.degree_cap() != cap_)
        throw ParameterError("entry has mismatched (p,k,D)");
    entries_[static_cast<std::size_t>(i) * n_ + j] = v;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (n_ != o.n_ || p_ != o.p_ || k_ != o.k_ || cap_ != o.cap_)
        throw ParameterError("matrices have mismatched shape or ring");
    RingMatrix r(n_, p_, k_, cap_);
    for (int i = 0; i < n_; ++i) {
        for (int l = 0; l < n_; ++l) {
            const TruncatedPoly& a = at(i, l);
            if (a.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const TruncatedPoly& b = o.at(l, j);
                if (b.is_zero()) continue;
                r.entries_[static_cast<std::size_t>(i) * n_ + j] =
                    r.at(i, j) + a * b;
            }
        }
    }
    return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
}

bool RingMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

RingMatrix RingMatrix::truncated_to(int new_cap) const {
    RingMatrix r(n_, p_, k_, new_cap);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            TruncatedPoly e(p_, k_, new_cap);
            for (const auto& [m, c] : at(i, j).terms())
                if (static_cast<int>(m.size()) <= new_cap) e.set_coeff(m, c);
            r.set(i, j, e);
        }
    return r;
}

std::string RingMatrix::key() const {
    std::string s = std::to_string(n_) + "#";
    for (const auto& e : entries_) {
        s += e.key();
        s += '|';
    }
    return s;
}

std::string RingMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < n_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string();
        }
    }
    os << "]";
    return os.str();
}

}  // namespace steinfix::alg
