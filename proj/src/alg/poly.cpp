#include "steinfix/alg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace steinfix::alg {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int reduce(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

}  // namespace

TruncatedPoly::TruncatedPoly(int p, int k, int degree_cap)
    : p_(p), k_(k), cap_(degree_cap) {
    if (!is_prime(p)) throw ParameterError("modulus " + std::to_string(p) + " is not prime");
    if (k < 0) throw ParameterError("variable count must be nonnegative");
    if (degree_cap < 0) throw ParameterError("degree cap must be nonnegative");
}

TruncatedPoly TruncatedPoly::constant(int p, int k, int degree_cap, long long value) {
    TruncatedPoly r(p, k, degree_cap);
    r.set_coeff({}, value);
    return r;
}

TruncatedPoly TruncatedPoly::variable(int p, int k, int degree_cap, int m) {
    if (m < 1 || m > k) throw ParameterError("variable index out of range");
    TruncatedPoly r(p, k, degree_cap);
    if (degree_cap >= 1) r.set_coeff({static_cast<std::uint8_t>(m)}, 1);
    return r;
}

bool TruncatedPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

int TruncatedPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, static_cast<int>(m.size()));
    return d;
}

int TruncatedPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void TruncatedPoly::set_coeff(const Monomial& m, long long value) {
    if (static_cast<int>(m.size()) > cap_)
        throw ParameterError("monomial exceeds degree cap");
    for (auto v : m)
        if (v < 1 || v > k_) throw ParameterError("monomial uses an unknown variable");
    int c = reduce(value, p_);
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

void TruncatedPoly::check_compatible(const TruncatedPoly& o) const {
    if (p_ != o.p_ || k_ != o.k_ || cap_ != o.cap_)
        throw ParameterError("polynomials have mismatched (p,k,D)");
}

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& o) const {
    check_compatible(o);
    TruncatedPoly r = *this;
    for (const auto& [m, c] : o.terms_) {
        int s = reduce(static_cast<long long>(r.coeff(m)) + c, p_);
        if (s == 0)
            r.terms_.erase(m);
        else
            r.terms_[m] = s;
    }
    return r;
}

TruncatedPoly TruncatedPoly::operator-() const {
    TruncatedPoly r(p_, k_, cap_);
    for (const auto& [m, c] : terms_) r.terms_[m] = p_ - c;
    return r;
}

TruncatedPoly TruncatedPoly::operator-(const TruncatedPoly& o) const {
    return *this + (-o);
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& o) const {
    check_compatible(o);
    TruncatedPoly r(p_, k_, cap_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            if (static_cast<int>(ma.size() + mb.size()) > cap_) continue;  // truncated away
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            int s = reduce(static_cast<long long>(r.coeff(m)) +
                               static_cast<long long>(ca) * cb,
                           p_);
            if (s == 0)
                r.terms_.erase(m);
            else
                r.terms_[m] = s;
        }
    }
    return r;
}

bool TruncatedPoly::operator==(const TruncatedPoly& o) const {
    return p_ == o.p_ && k_ == o.k_ && cap_ == o.cap_ && terms_ == o.terms_;
}

std::string TruncatedPoly::key() const {
    std::string s;
    for (const auto& [m, c] : terms_) {
        s += std::to_string(c);
        s += ':';
        for (auto v : m) s += static_cast<char>('0' + v);
        s += ';';
    }
    return s;
}

std::string TruncatedPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << "+";
        first = false;
        if (m.empty()) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) os << "*";
            os << "t" << static_cast<int>(m[i]);
        }
    }
    return os.str();
}

std::vector<TruncatedPoly> coefficient_pool(int p, int k, int degree_cap, int max_degree) {
    if (max_degree > degree_cap)
        throw ParameterError("pool degree exceeds the ring's degree cap");
    // All monomials of degree <= max_degree, in the poly's canonical order.
    std::vector<Monomial> monomials;
    std::vector<Monomial> frontier = {Monomial{}};
    monomials.push_back({});
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            for (int v = 1; v <= k; ++v) {
                Monomial e = m;
                e.push_back(static_cast<std::uint8_t>(v));
                next.push_back(e);
            }
        }
        monomials.insert(monomials.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(monomials.begin(), monomials.end());

    std::vector<TruncatedPoly> pool;
    std::vector<int> coeffs(monomials.size(), 0);
    while (true) {
        TruncatedPoly q(p, k, degree_cap);
        for (std::size_t i = 0; i < monomials.size(); ++i)
            if (coeffs[i]) q.set_coeff(monomials[i], coeffs[i]);
        pool.push_back(q);
        std::size_t i = 0;
        while (i < coeffs.size() && coeffs[i] == p - 1) coeffs[i++] = 0;
        if (i == coeffs.size()) break;
        ++coeffs[i];
    }
    return pool;
}

}  // namespace steinfix::alg
