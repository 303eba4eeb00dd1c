#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equichar/character_table.hpp"
#include "equichar/class_function.hpp"
#include "equichar/lrr.hpp"

namespace equichar {

/// 64-bit linear congruential generator,
///   state <- 6364136223846793005 * state + 1442695040888963407  (mod 2^64),
/// seeded with state = seed. Each draw advances once and uses bits 33..63.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }

    /// Uniform-ish integer in [lo, hi] by reduction modulo the range width.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto width = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next() % width);
    }

private:
    std::uint64_t state_;
};

/// Spanning set used when no character table is available: Ind_<s>^G chi^j
/// for every dual cyclic class (in class order) and j = 0, ..., r-1.
inline std::vector<ClassFunction> induced_cyclic_basis(const GroupPtr& G) {
    std::vector<ClassFunction> out;
    for (const auto& s : G->cyclic_subgroup_classes()) {
        SubgroupEmbedding cyc = cyclic_subgroup(G, s.generator);
        for (int j = 0; j < s.order; ++j) out.push_back(induce(cyclic_character(cyc, j), cyc));
    }
    return out;
}

/// Integer combination with coefficients drawn from [-5, 5], against the
/// irreducible characters when a table is given and against
/// induced_cyclic_basis() otherwise.
inline ClassFunction random_virtual_character(const GroupPtr& G, const std::vector<ClassFunction>& basis, Lcg& rng) {
    ClassFunction acc = ClassFunction::zero(G);
    for (const auto& b : basis) {
        const std::int64_t c = rng.uniform(-5, 5);
        if (c != 0) acc += Cyclotomic(static_cast<long>(c)) * b;
    }
    return acc;
}

/// The basis random_virtual_character() draws against for G: Dixon rows in
/// characteristic 0 when the group is within the table cap, else induced
/// cyclic characters.
inline std::vector<ClassFunction> random_basis(const GroupPtr& G) {
    if (G->characteristic() == 0 && G->order() <= character_table_cap().load()) return character_table(G).rows;
    return induced_cyclic_basis(G);
}

}  // namespace equichar
