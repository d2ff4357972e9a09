#pragma once

#include <string>
#include <vector>

#include "steinfix/alg/poly.hpp"

namespace steinfix::alg {

/// Square matrix over the truncated ring. All entries share (p,k,D).
class RingMatrix {
public:
    RingMatrix(int n, int p, int k, int degree_cap);  // zero matrix

    static RingMatrix identity(int n, int p, int k, int degree_cap);
    /// Identity plus r at (i,j); i,j are 1-based and must differ.
    static RingMatrix elementary(int n, int i, int j, const TruncatedPoly& r);

    int size() const { return n_; }
    int modulus() const { return p_; }
    int vars() const { return k_; }
    int degree_cap() const { return cap_; }

    const TruncatedPoly& at(int i, int j) const;  // 0-based
    void set(int i, int j, const TruncatedPoly& v);

    RingMatrix operator*(const RingMatrix& o) const;
    bool operator==(const RingMatrix& o) const;
    bool is_identity() const;

    /// Re-express every entry in a ring with a different degree cap; terms
    /// above the new cap are discarded.
    RingMatrix truncated_to(int new_cap) const;

    std::string key() const;
    std::string to_string() const;

private:
    int n_, p_, k_, cap_;
    std::vector<TruncatedPoly> entries_;  // row-major
};

}  // namespace steinfix::alg
