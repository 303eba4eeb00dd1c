#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <ostream>
#include <utility>
#include <vector>

#include "equichar/error.hpp"
#include "equichar/rational.hpp"

namespace equichar {

/// Dense univariate polynomial over Q, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RatPoly constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }
    /// c * x^k
    static RatPoly monomial(std::size_t k, const Rational& c = 1) {
        std::vector<Rational> v(k + 1);
        v[k] = c;
        return RatPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return RatPoly(std::move(v));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return RatPoly(std::move(v));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return RatPoly(std::move(v));
    }
    friend RatPoly operator*(const Rational& c, const RatPoly& a) {
        std::vector<Rational> v = a.coeffs_;
        for (auto& x : v) x *= c;
        return RatPoly(std::move(v));
    }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division: returns (quotient, remainder) with deg remainder < deg divisor.
    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        std::vector<Rational> rem = a.coeffs_;
        const int db = b.degree();
        if (a.degree() < db) return {RatPoly{}, a};
        std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
        const Rational inv_lead = 1 / b.leading();
        for (int k = a.degree() - db; k >= 0; --k) {
            Rational c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
            quo[static_cast<std::size_t>(k)] = c;
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
        }
        rem.resize(static_cast<std::size_t>(db));
        return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
    }
    friend RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

    /// Value at a rational point (Horner).
    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (int k = p.degree(); k >= 0; --k) {
            const Rational& c = p.coeffs_[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            Rational a = abs(c);
            if (a != 1 || k == 0) os << a;
            if (k > 0) os << "x";
            if (k > 1) os << "^" << k;
            first = false;
        }
        return os;
    }

private:
    void trim() {
        for (auto& c : coeffs_) c.canonicalize();
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Result of the extended Euclidean algorithm: u*a + v*b = g, g monic.
struct Bezout {
    RatPoly g, u, v;
};

inline Bezout extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly u0 = RatPoly::constant(1), u1;
    RatPoly v0, v1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly u2 = u0 - q * u1;
        RatPoly v2 = v0 - q * v1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * u0, inv * v0};
}

/// x^n - 1
inline RatPoly x_pow_minus_one(std::int64_t n) {
    return RatPoly::monomial(static_cast<std::size_t>(n)) - RatPoly::constant(1);
}

/// The n-th cyclotomic polynomial, by exact division of x^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n. Results are memoized.
inline const RatPoly& cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw DomainError("cyclotomic_polynomial: n must be positive");
    static std::mutex mu;
    static std::map<std::int64_t, RatPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    RatPoly p = x_pow_minus_one(n);
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod(p, cyclotomic_polynomial(d));
        p = std::move(q);
    }
    std::lock_guard lock(mu);
    // std::map never invalidates references on insertion.
    return cache.emplace(n, std::move(p)).first->second;
}

/// The idempotent e of Q[x]/(x^r - 1) with e = 1 mod Phi_r and
/// e = 0 mod (x^r - 1)/Phi_r. Multiplication by e is the section of the
/// projection Q[x]/(x^r - 1) -> Q[x]/Phi_r(x).
inline RatPoly crt_idempotent(std::int64_t r) {
    if (r < 1) throw DomainError("crt_idempotent: r must be positive");
    const RatPoly& phi = cyclotomic_polynomial(r);
    RatPoly xr = x_pow_minus_one(r);
    RatPoly cofactor = divmod(xr, phi).first;
    Bezout b = extended_gcd(phi, cofactor);
    // b.u * phi + b.v * cofactor = 1
    return (b.v * cofactor) % xr;
}

}  // namespace equichar
