#include "steinfix/alg/steinberg.hpp"

#include <algorithm>

namespace steinfix::alg {

namespace {

std::string elem_label(int i, int j, const TruncatedPoly& r) {
    return "x[" + std::to_string(i) + "," + std::to_string(j) + "](" + r.to_string() + ")";
}

GeneratorSpec make_gen(int n, int i, int j, const TruncatedPoly& r) {
    return GeneratorSpec{RingMatrix::elementary(n, i, j, r), elem_label(i, j, r)};
}

}  // namespace

const std::vector<GeneratorSpec>& SteinbergGenerators::family(int i) const {
    switch (i) {
        case 1: return g1;
        case 2: return g2;
        case 3: return g3;
        default: throw ParameterError("family index must be 1, 2 or 3");
    }
}

std::vector<GeneratorSpec> SteinbergGenerators::pair(int i, int j) const {
    if (i == j) throw ParameterError("pair requires two distinct families");
    std::vector<GeneratorSpec> out = family(i);
    const auto& other = family(j);
    out.insert(out.end(), other.begin(), other.end());
    return out;
}

SteinbergGenerators steinberg_generators(int n, int k, int p, int degree_cap) {
    if (n < 3) throw ParameterError("unsupported: Steinberg generators need n >= 3");
    if (degree_cap < n)
        throw ParameterError("degree cap must be at least n to represent the pairwise groups");
    const TruncatedPoly one = TruncatedPoly::constant(p, k, degree_cap, 1);

    SteinbergGenerators gens;
    for (int i = 1; i <= n - 2; ++i) gens.g1.push_back(make_gen(n, i, n - 1, one));
    gens.g2.push_back(make_gen(n, n - 1, n, one));
    for (int j = 1; j <= n - 2; ++j) {
        gens.g3.push_back(make_gen(n, n, j, one));
        for (int m = 1; m <= k; ++m)
            gens.g3.push_back(make_gen(n, n, j, TruncatedPoly::variable(p, k, degree_cap, m)));
    }
    return gens;
}

RelationReport verify_steinberg_relations(int n, int k, int p, int degree_cap,
                                          const std::vector<TruncatedPoly>& pool) {
    if (n < 2) throw ParameterError("relations need n >= 2");
    int max_deg = 0;
    for (const auto& r : pool) max_deg = std::max(max_deg, r.degree());
    if (degree_cap < 2 * max_deg)
        throw ParameterError(
            "truncation risk: degree cap " + std::to_string(degree_cap) +
            " < 2 * max pool degree " + std::to_string(max_deg) +
            "; products in the commutator identity would be cut off");

    auto elem = [&](int i, int j, const TruncatedPoly& r) {
        return RingMatrix::elementary(n, i, j, r);
    };
    auto commutator = [&](const RingMatrix& x, int xi, int xj, const TruncatedPoly& xr,
                          const RingMatrix& y, int yi, int yj, const TruncatedPoly& yr) {
        // x^{-1} y^{-1} x y with the elementary inverses x_{i,j}(-r)
        return elem(xi, xj, -xr) * elem(yi, yj, -yr) * x * y;
    };

    RelationReport report;
    // (1) additivity in the argument
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (const auto& r1 : pool)
                for (const auto& r2 : pool) {
                    ++report.checked[0];
                    if (!(elem(i, j, r1) * elem(i, j, r2) == elem(i, j, r1 + r2)))
                        ++report.violations[0];
                }
        }
    // (2) overlapping commutator
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l) {
                if (i == j || j == l || i == l) continue;
                for (const auto& r1 : pool)
                    for (const auto& r2 : pool) {
                        ++report.checked[1];
                        RingMatrix lhs = commutator(elem(i, j, r1), i, j, r1,
                                                    elem(j, l, r2), j, l, r2);
                        if (!(lhs == elem(i, l, r1 * r2))) ++report.violations[1];
                    }
            }
    // (3) disjoint commutator
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int l = 1; l <= n; ++l)
                for (int m = 1; m <= n; ++m) {
                    if (l == m || j == l || i == m) continue;
                    for (const auto& r1 : pool)
                        for (const auto& r2 : pool) {
                            ++report.checked[2];
                            RingMatrix lhs = commutator(elem(i, j, r1), i, j, r1,
                                                        elem(l, m, r2), l, m, r2);
                            if (!lhs.is_identity()) ++report.violations[2];
                        }
                }
        }
    return report;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::elementary(int n, int i, int j, long long value) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw ParameterError("bad elementary indices");
    IntMatrix m = identity(n);
    m.at(i - 1, j - 1) = value;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n != o.n) throw ParameterError("integer matrix size mismatch");
    IntMatrix r;
    r.n = n;
    r.a.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            const BigInt& v = at(i, l);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(l, j);
        }
    return r;
}

bool IntMatrix::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix kernel_word_image(int n, int repetitions) {
    if (n < 2) throw ParameterError("kernel word needs n >= 2");
    IntMatrix base = IntMatrix::elementary(n, 1, 2, 1) *
                     IntMatrix::elementary(n, 2, 1, -1) *
                     IntMatrix::elementary(n, 1, 2, 1);
    IntMatrix out = IntMatrix::identity(n);
    for (int r = 0; r < repetitions; ++r) out = out * base;
    return out;
}

}  // namespace steinfix::alg
