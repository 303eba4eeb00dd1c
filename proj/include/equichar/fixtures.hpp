#pragma once

#include <cstdint>
#include <vector>

#include "equichar/curve.hpp"
#include "equichar/lrr.hpp"
#include "equichar/random.hpp"
#include "equichar/standard_groups.hpp"

// Hand-built curve data: the hyperelliptic involution, the wild Z/p point,
// and randomized cyclic ramification.

namespace equichar::fixtures {

/// Orbit with stabilizer G_x = <s> (s an element of the ambient group) whose
/// fiber is the sum of the characters chi^a, a in fiber_powers, and whose
/// conormal character is chi^conormal_power; chi(s) = zeta_e_t. Elements of
/// p-power order act trivially on both, so everything factors through the
/// tame quotient.
inline RamifiedOrbit cyclic_orbit(const GroupPtr& G, int s, int e_t, const std::vector<int>& fiber_powers,
                                  int conormal_power) {
    RamifiedOrbit o;
    o.stabilizer = cyclic_subgroup(G, s);
    o.e = o.stabilizer.sub->size();
    o.e_t = e_t;
    // Element k of <s> is s^k; its image in the tame quotient Z/e_t is k mod e_t.
    auto power_char = [&](int a) {
        return ClassFunction::from_representatives(o.stabilizer.sub, [&](int k) {
            return Cyclotomic::root_of_unity(e_t, static_cast<std::int64_t>(a) * k);
        });
    };
    o.fiber = ClassFunction::zero(o.stabilizer.sub);
    for (int a : fiber_powers) o.fiber += power_char(a);
    o.conormal = power_char(conormal_power);
    return o;
}

/// Z/2 acting on a curve with two fixed points, trivial fiber, sign conormal,
/// chi(X, E) = 1.
inline CurveDatum hyperelliptic_z2() {
    auto G = groups::cyclic(2);
    CurveDatum d;
    d.group = G;
    d.rank = 1;
    d.chi_global = 1;
    d.orbits = {cyclic_orbit(G, 1, 2, {0}, 1), cyclic_orbit(G, 1, 2, {0}, 1)};
    return d;
}

/// Z/p in characteristic p on P^1, structure sheaf, one totally wildly
/// ramified point (e = p, e_t = 1).
inline CurveDatum wild_cyclic(int p) {
    auto G = groups::cyclic(p, p);
    CurveDatum d;
    d.group = G;
    d.rank = 1;
    d.chi_global = 1;
    d.orbits = {cyclic_orbit(G, 1, 1, {0}, 0)};
    return d;
}

/// A random valid orbit with tame index e_t. Odd draws are tame in
/// characteristic 0 (G_x = Z/e_t); even draws are wild with a prime p not
/// dividing e_t (G_x = Z/(p e_t) in characteristic p).
inline RamifiedOrbit random_orbit(int e_t, Lcg& rng) {
    int p = 0;
    if (rng.uniform(0, 1) == 1) {
        for (int cand : {2, 3, 5, 7}) {
            if (e_t % cand == 0) continue;
            if (rng.uniform(0, 1) == 1 || cand == 7) {
                p = cand;
                break;
            }
        }
    }
    const int order = p == 0 ? e_t : p * e_t;
    auto G = groups::cyclic(order, p);
    const int rank = static_cast<int>(rng.uniform(1, 4));
    std::vector<int> powers;
    for (int i = 0; i < rank; ++i) powers.push_back(static_cast<int>(rng.uniform(0, e_t - 1)));
    int conormal = 1;
    do {
        conormal = static_cast<int>(rng.uniform(1, std::max(1, e_t - 1)));
    } while (gcd(conormal, e_t) != 1);
    if (e_t == 1) conormal = 0;
    return cyclic_orbit(G, order > 1 ? 1 : 0, e_t, powers, conormal);
}

}  // namespace equichar::fixtures
