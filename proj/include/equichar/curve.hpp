#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equichar/class_function.hpp"
#include "equichar/error.hpp"
#include "equichar/group.hpp"

namespace equichar {

/// A G-orbit of points with nontrivial stabilizer on a curve.
struct RamifiedOrbit {
    SubgroupEmbedding stabilizer;  // G_x in G
    int e = 1;                     // ramification index, |G_x|
    int e_t = 1;                   // tame ramification index
    ClassFunction fiber;           // character of E_x on G_x
    ClassFunction conormal;        // character of the cotangent line at x, 1-dimensional
};

enum class ChiMode { direct, hrr };

/// Ramification data of a G-curve together with the global Euler characteristic.
/// In direct mode chi_global is given; in hrr mode it is derived from
/// (deg, g_Y) by Hirzebruch-Riemann-Roch and Riemann-Hurwitz.
struct CurveDatum {
    GroupPtr group;
    int rank = 1;
    ChiMode mode = ChiMode::direct;
    Rational chi_global = 0;
    std::int64_t deg = 0;
    std::int64_t genus_quotient = 0;  // g_Y
    std::vector<RamifiedOrbit> orbits;
};

/// Smallest m >= 1 with chi^m trivial, for a 1-dimensional class function.
inline int multiplicative_order(const ClassFunction& chi) {
    const ClassFunction one = ClassFunction::trivial(chi.group());
    ClassFunction power = chi;
    for (int m = 1; m <= chi.group()->size(); ++m) {
        if (power == one) return m;
        power = power * chi;
    }
    throw InvariantError("character does not have finite order dividing |G|");
}

/// The lift of 1/(1 - chi) for a character chi of order e_t:
/// -(1/e_t) sum_{d=1}^{e_t - 1} d chi^d. At elements where chi != 1 this is the
/// pointwise inverse of 1 - chi; its dimension is -(e_t - 1)/2.
inline ClassFunction invert_one_minus(const ClassFunction& chi, int e_t) {
    const int p = chi.characteristic();
    if (e_t < 1 || (p > 0 && e_t % p == 0)) throw InvariantError("tame index must be positive and prime to p");
    if (chi.degree() != Cyclotomic(1)) throw InvariantError("conormal character is not 1-dimensional");
    if (multiplicative_order(chi) != e_t)
        throw InvariantError("character order " + std::to_string(multiplicative_order(chi)) +
                             " differs from tame index " + std::to_string(e_t));
    ClassFunction acc = ClassFunction::zero(chi.group());
    ClassFunction power = chi;
    for (int d = 1; d < e_t; ++d) {
        acc += Cyclotomic(d) * power;
        power = power * chi;
    }
    return Cyclotomic(frac(-1, e_t)) * acc;
}

/// Checks the orbit invariants for a group of characteristic p and bundle rank.
inline void validate(const RamifiedOrbit& o, int rank) {
    const GroupPtr& Gx = o.stabilizer.sub;
    const int p = Gx->characteristic();
    if (o.e != Gx->size())
        throw InvariantError("orbit: e = " + std::to_string(o.e) + " but |G_x| = " + std::to_string(Gx->size()));
    if (o.e_t < 1 || o.e % o.e_t != 0) throw InvariantError("orbit: e_t must divide e");
    int wild = o.e / o.e_t;
    if (p == 0 && wild != 1) throw InvariantError("orbit: e_t must equal e in characteristic 0");
    if (p > 0) {
        if (o.e_t % p == 0) throw InvariantError("orbit: e_t must be prime to p");
        while (wild % p == 0) wild /= p;
        if (wild != 1) throw InvariantError("orbit: e/e_t must be a power of p");
    }
    if (o.fiber.group() != Gx || o.conormal.group() != Gx)
        throw InvariantError("orbit: fiber and conormal characters must live on the stabilizer");
    if (o.fiber.degree() != Cyclotomic(rank)) throw InvariantError("orbit: fiber dimension differs from rank");
    if (o.conormal.degree() != Cyclotomic(1)) throw InvariantError("orbit: conormal character must be 1-dimensional");
    if (multiplicative_order(o.conormal) != o.e_t)
        throw InvariantError("orbit: conormal character must have order e_t");
}

inline void validate(const CurveDatum& d) {
    if (d.rank < 0) throw InvariantError("rank must be non-negative");
    for (const auto& o : d.orbits) {
        if (o.stabilizer.ambient != d.group) throw InvariantError("orbit stabilizer is not a subgroup of the datum group");
        validate(o, d.rank);
    }
    if (d.mode == ChiMode::hrr) {
        const int p = d.group->characteristic();
        for (const auto& o : d.orbits)
            if (o.e != o.e_t || (p > 0 && o.e % p == 0))
                throw InvariantError("HRR mode requires tame ramification");
        if (d.genus_quotient < 0) throw InvariantError("g_Y must be non-negative");
    }
}

/// A_x = E_x / (1 - N_x^dual) through invert_one_minus.
inline ClassFunction local_term(const RamifiedOrbit& o) { return o.fiber * invert_one_minus(o.conormal, o.e_t); }

/// chi(X, E) = deg E + rk E (n (1 - g_Y) - (1/2) sum_x (e_x - 1)), with the sum
/// taken per orbit of n/e_x points.
inline Rational chi_hrr(std::int64_t deg, int rank, std::int64_t genus_quotient,
                        const std::vector<RamifiedOrbit>& orbits, std::int64_t group_order) {
    Rational ramification = 0;
    for (const auto& o : orbits) {
        const int p = o.stabilizer.sub->characteristic();
        if (o.e != o.e_t || (p > 0 && o.e % p == 0)) throw InvariantError("chi_hrr called on wild ramification data");
        ramification += Rational(group_order / o.e * (o.e - 1));
    }
    Rational r = Rational(group_order * (1 - genus_quotient)) - ramification / 2;
    return Rational(deg) + rank * r;
}

inline Rational global_euler_char(const CurveDatum& d) {
    if (d.mode == ChiMode::direct) return d.chi_global;
    return chi_hrr(d.deg, d.rank, d.genus_quotient, d.orbits, static_cast<std::int64_t>(d.group->order()));
}

/// chi_G(X, E) = (chi(X, E) + (rk E / 2) sum_x (e^t_x - 1)) kG/n
///             + sum_x (e_x/n) Ind_{G_x}^G E_x / (1 - N_x^dual).
/// Each orbit holds n/e_x points with conjugate stabilizers, so the second sum
/// is one induced local term per orbit.
inline ClassFunction curve_euler_char(const CurveDatum& d) {
    validate(d);
    const std::int64_t n = static_cast<std::int64_t>(d.group->order());
    Rational tame_sum = 0;
    for (const auto& o : d.orbits) tame_sum += Rational(n / o.e * (o.e_t - 1));
    Rational geometric = global_euler_char(d) + Rational(d.rank) * tame_sum / 2;
    // kG/n is 1 at the identity and 0 elsewhere.
    std::vector<Cyclotomic> v(ClassFunction::zero(d.group).values().size());
    v[0] = Cyclotomic(geometric);
    ClassFunction result(d.group, std::move(v));
    for (const auto& o : d.orbits) result += induce(local_term(o), o.stabilizer);
    return result;
}

}  // namespace equichar
