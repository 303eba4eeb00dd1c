#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equichar/class_function.hpp"
#include "equichar/cyclotomic.hpp"
#include "equichar/error.hpp"
#include "equichar/group.hpp"
#include "equichar/ratpoly.hpp"

namespace equichar {

/// Euler characteristics q_{sigma,i} of the isotypic pieces, one entry per
/// conjugacy class of dual cyclic subgroups sigma.
struct SectorEntry {
    int sigma = 0;               // id in cyclic_subgroup_classes()
    int generator = 0;           // marked generator s (element index); any generator of a conjugate works
    std::vector<Rational> q;     // q[i] for i in Z/r
};

struct SectorData {
    GroupPtr group;
    std::vector<SectorEntry> entries;
};

/// Sector data with every q zero and the canonical marked generators.
inline SectorData empty_sector_data(const GroupPtr& G) {
    SectorData d{G, {}};
    for (const auto& s : G->cyclic_subgroup_classes())
        d.entries.push_back({s.id, s.generator, std::vector<Rational>(static_cast<std::size_t>(s.order))});
    return d;
}

namespace detail {

inline void require_tame(const PermGroup& G, int r) {
    if (G.characteristic() > 0 && r % G.characteristic() == 0)
        throw InvariantError("order " + std::to_string(r) + " is divisible by the characteristic");
}

}  // namespace detail

/// iota(zeta_r^i) as a virtual character of <s>: zeta_r^(ik) at s^k when s^k
/// has exact order r, and 0 elsewhere. The cyclic group is given by its
/// embedding (element k = s^k).
inline ClassFunction iota(const SubgroupEmbedding& cyclic, std::int64_t i) {
    const GroupPtr& C = cyclic.sub;
    const int r = C->size();
    detail::require_tame(*C, r);
    return ClassFunction::from_representatives(C, [&](int k) -> Cyclotomic {
        if (C->element_order(k) != r) return Cyclotomic(0);
        return Cyclotomic::root_of_unity(r, i * k);
    });
}

/// The same element built from polynomials: x^i times crt_idempotent(r),
/// reduced mod x^r - 1, with x^j read as the character s^k -> zeta_r^(jk).
inline ClassFunction iota_via_idempotent(const SubgroupEmbedding& cyclic, std::int64_t i) {
    const GroupPtr& C = cyclic.sub;
    const int r = C->size();
    detail::require_tame(*C, r);
    RatPoly p = (RatPoly::monomial(static_cast<std::size_t>(mod(i, r))) * crt_idempotent(r)) % x_pow_minus_one(r);
    return ClassFunction::from_representatives(C, [&](int k) {
        Cyclotomic v;
        for (std::size_t j = 0; j < p.coeffs().size(); ++j)
            if (p.coeffs()[j] != 0)
                v += Cyclotomic::root_of_unity(r, static_cast<std::int64_t>(j) * k).scaled(p.coeffs()[j]);
        return v;
    });
}

/// The character s^k -> zeta_r^(ik) of the cyclic group <s>.
inline ClassFunction cyclic_character(const SubgroupEmbedding& cyclic, std::int64_t i) {
    const int r = cyclic.sub->size();
    return ClassFunction::from_representatives(cyclic.sub,
                                               [&](int k) { return Cyclotomic::root_of_unity(r, i * k); });
}

/// Anti-twist: the chi^i-isotypic part of Res_sigma V with its inherited
/// H-action, (m V)(h) = (1/r) sum_k zeta_r^(-ik) V(h s^k). The element s
/// (index into V's group) must be central.
inline ClassFunction m_push(const ClassFunction& V, int s, std::int64_t i) {
    const GroupPtr& H = V.group();
    for (const auto& g : H->generators())
        if (g * H->element(s) != H->element(s) * g) throw InvariantError("m_push: sigma is not central");
    const int r = H->element_order(s);
    detail::require_tame(*H, r);
    return ClassFunction::from_representatives(H, [&](int h) {
        Cyclotomic acc;
        int x = h;
        for (int k = 0; k < r; ++k, x = H->mul(x, s))
            acc += V.at(x) * Cyclotomic::root_of_unity(r, -i * k);
        return acc.scaled(frac(1, r));
    });
}

/// Sector weight (r/phi(r)) (1/|C(sigma)|), times the number of monomorphism
/// classes mu_r -> G lying over the subgroup class.
inline Rational sector_weight(const CyclicSubgroupClass& s) {
    Rational w(static_cast<long>(s.order) * s.marking_count(),
               static_cast<long>(euler_phi(s.order)) * static_cast<long>(s.centralizer_order));
    w.canonicalize();
    return w;
}

/// chi_G = sum over sigma, i of q_{sigma,i} (r/phi(r)) (1/|C(sigma)|) Ind_sigma^G iota(zeta_r^i),
/// each subgroup class counted once per monomorphism class over it.
inline ClassFunction assemble_sectors(const SectorData& data) {
    const GroupPtr& G = data.group;
    const auto& classes = G->cyclic_subgroup_classes();
    std::vector<bool> seen(classes.size(), false);
    ClassFunction total = ClassFunction::zero(G);
    for (const auto& entry : data.entries) {
        if (entry.sigma < 0 || static_cast<std::size_t>(entry.sigma) >= classes.size())
            throw InvariantError("sector id " + std::to_string(entry.sigma) + " out of range");
        const auto& s = classes[static_cast<std::size_t>(entry.sigma)];
        if (seen[static_cast<std::size_t>(entry.sigma)])
            throw InvariantError("sector " + std::to_string(entry.sigma) + " listed twice");
        seen[static_cast<std::size_t>(entry.sigma)] = true;
        if (entry.generator < 0 || entry.generator >= G->size() || G->element_order(entry.generator) != s.order)
            throw InvariantError("sector " + std::to_string(entry.sigma) + ": marked generator has wrong order");
        if (entry.q.size() != static_cast<std::size_t>(s.order))
            throw InvariantError("sector " + std::to_string(entry.sigma) + ": expected " + std::to_string(s.order) +
                                 " isotypic values");
        bool all_zero = true;
        for (const auto& q : entry.q) all_zero = all_zero && q == 0;
        if (all_zero) continue;
        SubgroupEmbedding cyc = cyclic_subgroup(G, entry.generator);
        ClassFunction w = ClassFunction::zero(cyc.sub);
        for (std::size_t i = 0; i < entry.q.size(); ++i)
            if (entry.q[i] != 0) w += Cyclotomic(entry.q[i]) * iota(cyc, static_cast<std::int64_t>(i));
        total += Cyclotomic(sector_weight(s)) * induce(w, cyc);
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
        if (!seen[k]) throw InvariantError("sector " + std::to_string(k) + " missing from sector data");
    return total;
}

/// Sector data of V: q_{sigma,i} = isotypic dimension of Res_sigma V at chi^i.
inline SectorData sector_data_of(const ClassFunction& V) {
    SectorData d{V.group(), {}};
    for (const auto& s : V.group()->cyclic_subgroup_classes()) {
        SectorEntry e{s.id, s.generator, {}};
        SubgroupEmbedding cyc = cyclic_subgroup(V.group(), s.generator);
        ClassFunction res = restrict(V, cyc);
        const int gen = cyc.sub->size() > 1 ? 1 : 0;  // element 1 of <s> is s
        for (int i = 0; i < s.order; ++i) e.q.push_back(isotypic_dim(res, gen, i));
        d.entries.push_back(std::move(e));
    }
    return d;
}

/// Decomposes V into sector data and assembles it again; equals V.
inline ClassFunction reassemble(const ClassFunction& V) { return assemble_sectors(sector_data_of(V)); }

}  // namespace equichar
