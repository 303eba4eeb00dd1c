#pragma once

#include <atomic>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equichar/error.hpp"
#include "equichar/rational.hpp"
#include "equichar/ratpoly.hpp"

namespace equichar {

/// Largest conductor accepted by Cyclotomic (default 10^4).
inline std::atomic<std::int64_t>& conductor_cap() {
    static std::atomic<std::int64_t> cap{10000};
    return cap;
}

namespace detail {

/// Per-conductor reduction data for Q[x]/Phi_N.
struct CycloContext {
    std::int64_t conductor;
    std::size_t degree;  // phi(N)
    RatPoly phi;
    // Nonzero coefficients of Phi_N below the leading term: (index, value).
    std::vector<std::pair<std::size_t, long>> tail;
};

inline std::shared_ptr<const CycloContext> cyclo_context(std::int64_t n) {
    if (n < 1) throw DomainError("conductor must be positive");
    if (n > conductor_cap().load())
        throw CapError("conductor " + std::to_string(n) + " exceeds cap " +
                       std::to_string(conductor_cap().load()));
    static std::mutex mu;
    static std::map<std::int64_t, std::shared_ptr<const CycloContext>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto ctx = std::make_shared<CycloContext>();
    ctx->conductor = n;
    ctx->phi = cyclotomic_polynomial(n);
    ctx->degree = static_cast<std::size_t>(ctx->phi.degree());
    for (std::size_t j = 0; j < ctx->degree; ++j) {
        const Rational& c = ctx->phi.coeffs()[j];
        if (c == 0) continue;
        if (!is_integer(c) || !c.get_num().fits_slong_p())
            throw CapError("cyclotomic polynomial coefficient out of range");
        ctx->tail.emplace_back(j, c.get_num().get_si());
    }
    std::lock_guard lock(mu);
    return cache.emplace(n, std::move(ctx)).first->second;
}

/// Reduces v (any length) modulo the monic Phi_N in place, leaving phi(N) entries.
inline void reduce_mod_phi(std::vector<Rational>& v, const CycloContext& ctx) {
    const std::size_t deg = ctx.degree;
    if (v.size() < deg) {
        v.resize(deg);
        return;
    }
    for (std::size_t k = v.size(); k-- > deg;) {
        if (v[k] == 0) continue;
        const Rational c = v[k];
        const std::size_t shift = k - deg;
        for (const auto& [j, a] : ctx.tail) {
            if (a == 1) v[shift + j] -= c;
            else if (a == -1) v[shift + j] += c;
            else v[shift + j] -= c * a;
        }
        v[k] = 0;
    }
    v.resize(deg);
}

}  // namespace detail

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, z, ..., z^(phi(N)-1) of Q[x]/Phi_N(x) where z = exp(2 pi i / N).
/// Elements carry their conductor; mixed-conductor operations lift both sides
/// to the lcm. Equality is independent of the conductor.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(Rational(0)) {}
    Cyclotomic(const Rational& q) : conductor_(1), coeffs_{q} {  // NOLINT: implicit by design of the arithmetic
        coeffs_[0].canonicalize();
    }
    Cyclotomic(long q) : Cyclotomic(Rational(q)) {}               // NOLINT
    Cyclotomic(int q) : Cyclotomic(Rational(q)) {}                // NOLINT

    /// Element of Q(zeta_N) with the given power-basis coefficients; the
    /// vector is reduced modulo Phi_N, so any length is accepted.
    Cyclotomic(std::int64_t conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
        for (auto& c : coeffs) c.canonicalize();
        auto ctx = detail::cyclo_context(conductor);
        detail::reduce_mod_phi(coeffs, *ctx);
        coeffs_ = std::move(coeffs);
    }

    /// zeta_N^k for any integer k.
    static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k = 1) {
        std::vector<Rational> v(static_cast<std::size_t>(mod(k, n)) + 1);
        v.back() = 1;
        return Cyclotomic(n, std::move(v));
    }

    static Cyclotomic from_poly(std::int64_t n, const RatPoly& p) { return Cyclotomic(n, p.coeffs()); }

    std::int64_t conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    /// The rational value; throws unless is_rational().
    Rational rational() const {
        if (!is_rational()) throw DomainError("cyclotomic value is not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    /// The same element viewed in Q(zeta_m); m must be a multiple of the conductor.
    Cyclotomic lift(std::int64_t m) const {
        if (m == conductor_) return *this;
        if (m % conductor_ != 0) throw DomainError("lift target is not a multiple of the conductor");
        const std::size_t step = static_cast<std::size_t>(m / conductor_);
        std::vector<Rational> v(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * step] = coeffs_[i];
        return Cyclotomic(m, std::move(v));
    }

    /// The automorphism zeta_N -> zeta_N^k; k must be coprime to N. k = -1 is complex conjugation.
    Cyclotomic galois(std::int64_t k) const {
        if (gcd(k, conductor_) != 1)
            throw DomainError("galois: exponent " + std::to_string(k) + " not coprime to conductor " +
                              std::to_string(conductor_));
        if (conductor_ <= 2) return *this;
        const std::int64_t kk = mod(k, conductor_);
        std::vector<Rational> v(static_cast<std::size_t>(conductor_));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            v[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * kk, conductor_))] += coeffs_[i];
        }
        return Cyclotomic(conductor_, std::move(v));
    }
    Cyclotomic conj() const { return galois(-1); }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ != b.conductor_) {
            const std::int64_t l = lcm(a.conductor_, b.conductor_);
            return a.lift(l) + b.lift(l);
        }
        Cyclotomic r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ != b.conductor_) {
            const std::int64_t l = lcm(a.conductor_, b.conductor_);
            return a.lift(l) - b.lift(l);
        }
        Cyclotomic r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == 1) return b.scaled(a.coeffs_[0]);
        if (b.conductor_ == 1) return a.scaled(b.coeffs_[0]);
        if (a.conductor_ != b.conductor_) {
            const std::int64_t l = lcm(a.conductor_, b.conductor_);
            return a.lift(l) * b.lift(l);
        }
        const std::size_t n = a.coeffs_.size();
        std::vector<Rational> v(2 * n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.coeffs_[j] == 0) continue;
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Cyclotomic(a.conductor_, std::move(v));
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
    Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }

    Cyclotomic scaled(const Rational& q) const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c *= q;
        return r;
    }

    /// Multiplicative inverse from the Bezout identity u*a + v*Phi_N = 1.
    Cyclotomic inverse() const {
        if (is_zero()) throw DomainError("division by zero in cyclotomic field");
        if (is_rational()) return Cyclotomic(1 / coeffs_[0]).lift(conductor_);
        auto ctx = detail::cyclo_context(conductor_);
        Bezout bz = extended_gcd(RatPoly(coeffs_), ctx->phi);
        // Phi_N is irreducible, so the gcd is 1.
        return Cyclotomic(conductor_, bz.u.coeffs());
    }

    Cyclotomic pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic result = Cyclotomic(1).lift(conductor_);
        Cyclotomic base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
        const std::int64_t l = lcm(a.conductor_, b.conductor_);
        return a.lift(l).coeffs_ == b.lift(l).coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Total order: lexicographic on the power-basis coefficients at the common conductor.
    friend int compare(const Cyclotomic& a, const Cyclotomic& b) {
        const std::int64_t l = lcm(a.conductor_, b.conductor_);
        const Cyclotomic x = a.lift(l), y = b.lift(l);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            int c = cmp(x.coeffs_[i], y.coeffs_[i]);
            if (c != 0) return c < 0 ? -1 : 1;
        }
        return 0;
    }

    /// Human-readable form, e.g. "1 + 2*z5^2" (z5 = zeta_5).
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            Rational a = abs(c);
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            if (k == 0) {
                os << a;
                continue;
            }
            if (a != 1) os << a << "*";
            os << "z" << conductor_;
            if (k > 1) os << "^" << k;
        }
        if (first) os << "0";
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

private:
    std::int64_t conductor_;
    std::vector<Rational> coeffs_;
};

/// Parses the output of Cyclotomic::str(): a sum of terms "c", "c*zN^k",
/// "zN^k" or "zN", with c a rational. The conductor is the lcm of the N seen.
inline Cyclotomic parse_cyclotomic(std::string_view text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw ParseError("empty cyclotomic number");
    Cyclotomic total;
    std::size_t pos = 0;
    while (pos < t.size()) {
        bool negative = false;
        if (t[pos] == '+' || t[pos] == '-') {
            negative = t[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < t.size() && !((t[end] == '+' || t[end] == '-') && t[end - 1] != '^')) ++end;
        std::string term = t.substr(pos, end - pos);
        if (term.empty()) throw ParseError("malformed cyclotomic number '" + std::string(text) + "'");
        pos = end;
        Rational coeff = 1;
        std::string root = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            coeff = parse_rational(term.substr(0, star));
            root = term.substr(star + 1);
        } else if (term[0] != 'z') {
            coeff = parse_rational(term);
            root.clear();
        }
        Cyclotomic value = coeff;
        if (!root.empty()) {
            if (root[0] != 'z') throw ParseError("expected zN in term '" + term + "'");
            std::int64_t n = 0, k = 1;
            try {
                const auto caret = root.find('^');
                std::size_t used = 0;
                n = std::stoll(root.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), &used);
                if (used + 1 != (caret == std::string::npos ? root.size() : caret)) throw ParseError("");
                if (caret != std::string::npos) {
                    k = std::stoll(root.substr(caret + 1), &used);
                    if (caret + 1 + used != root.size()) throw ParseError("");
                }
            } catch (const std::exception&) {
                throw ParseError("malformed root of unity '" + root + "'");
            }
            if (n < 1) throw ParseError("conductor must be positive in '" + root + "'");
            value = value * Cyclotomic::root_of_unity(n, k);
        }
        total += negative ? -value : value;
    }
    return total;
}

}  // namespace equichar
