#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "steinfix/alg/group.hpp"

namespace steinfix::alg {

/// The three generating families of St_n over the truncated ring:
///   g1 = { x_{i,n-1}(1) : 1 <= i <= n-2 }
///   g2 = { x_{n-1,n}(1) }
///   g3 = { x_{n,j}(1), x_{n,j}(t_m) : 1 <= j <= n-2, 1 <= m <= k }
struct SteinbergGenerators {
    std::vector<GeneratorSpec> g1, g2, g3;

    const std::vector<GeneratorSpec>& family(int i) const;
    /// Union of two families (for the pairwise groups G_{i,j}).
    std::vector<GeneratorSpec> pair(int i, int j) const;
};

SteinbergGenerators steinberg_generators(int n, int k, int p, int degree_cap);

constexpr std::size_t kDefaultClosureCap = 20000;

/// Outcome of the exhaustive relation check over a coefficient pool.
struct RelationReport {
    // [0]: x_{i,j}(r1) x_{i,j}(r2) = x_{i,j}(r1+r2)
    // [1]: [x_{i,j}(r1), x_{j,l}(r2)] = x_{i,l}(r1 r2)
    // [2]: [x_{i,j}(r1), x_{l,m}(r2)] = 1 for j != l, i != m
    std::array<long long, 3> checked{0, 0, 0};
    std::array<long long, 3> violations{0, 0, 0};
    bool all_pass() const {
        return violations[0] == 0 && violations[1] == 0 && violations[2] == 0;
    }
};

/// Exhaustively checks the three defining relation families over the pool.
/// Refuses (ParameterError) if the degree cap could truncate a product in
/// family (2), i.e. if D < 2 * max degree over the pool.
RelationReport verify_steinberg_relations(int n, int k, int p, int degree_cap,
                                          const std::vector<TruncatedPoly>& pool);

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact arbitrary-size entries.
struct IntMatrix {
    int n = 0;
    std::vector<BigInt> a;  // row-major

    static IntMatrix identity(int n);
    /// Identity plus value at (i,j), 1-based.
    static IntMatrix elementary(int n, int i, int j, long long value);
    BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    IntMatrix operator*(const IntMatrix& o) const;
    bool is_identity() const;
};

/// Image under the elementary-matrix map of
/// (x_{1,2}(1) x_{2,1}(-1) x_{1,2}(1))^repetitions, computed exactly.
/// The default power of 4 gives the identity matrix for every n >= 2.
IntMatrix kernel_word_image(int n, int repetitions = 4);

}  // namespace steinfix::alg
