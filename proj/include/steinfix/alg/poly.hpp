#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steinfix/common.hpp"

namespace steinfix::alg {

/// Monomial = word over the variable alphabet {1..k}; the empty word is the
/// constant monomial. Concatenation is the (non-commutative) product.
using Monomial = std::vector<std::uint8_t>;

/// Element of F_p<t_1..t_k> truncated at total degree D: every monomial of
/// length > D is identically zero. Coefficients are stored sparsely, always
/// nonzero and reduced to [0, p).
class TruncatedPoly {
public:
    TruncatedPoly(int p, int k, int degree_cap);

    static TruncatedPoly constant(int p, int k, int degree_cap, long long value);
    /// The variable t_m (1-based index).
    static TruncatedPoly variable(int p, int k, int degree_cap, int m);

    int modulus() const { return p_; }
    int vars() const { return k_; }
    int degree_cap() const { return cap_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int degree() const;  // -1 for the zero polynomial

    int coeff(const Monomial& m) const;
    /// Reduces mod p, drops zero coefficients, rejects monomials longer than D.
    void set_coeff(const Monomial& m, long long value);

    TruncatedPoly operator+(const TruncatedPoly& o) const;
    TruncatedPoly operator-() const;
    TruncatedPoly operator-(const TruncatedPoly& o) const;
    TruncatedPoly operator*(const TruncatedPoly& o) const;
    bool operator==(const TruncatedPoly& o) const;
    bool operator!=(const TruncatedPoly& o) const { return !(*this == o); }

    const std::map<Monomial, int>& terms() const { return terms_; }

    /// Canonical serialization, used as a hash key. Terms appear in the
    /// map's deterministic monomial order.
    std::string key() const;
    std::string to_string() const;

private:
    void check_compatible(const TruncatedPoly& o) const;

    int p_;
    int k_;
    int cap_;
    std::map<Monomial, int> terms_;
};

/// All polynomials of total degree <= max_degree with the given parameters,
/// enumerated deterministically (coefficient-lexicographic). Intended for
/// small pools only; the count is p^(#monomials of degree <= max_degree).
std::vector<TruncatedPoly> coefficient_pool(int p, int k, int degree_cap, int max_degree);

}  // namespace steinfix::alg
