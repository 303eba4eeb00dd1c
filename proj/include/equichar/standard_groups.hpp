#pragma once

#include <string>
#include <vector>

#include "equichar/group.hpp"

// Small permutation groups used by the verification suites.

namespace equichar::groups {

inline GroupPtr trivial(int p = 0) { return enumerate(1, {}, p); }

/// Z/n acting regularly on n points.
inline GroupPtr cyclic(int n, int p = 0) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
    return enumerate(n, {Perm::from_cycles(n, {cycle})}, p);
}

inline GroupPtr symmetric3(int p = 0) {
    return enumerate(3, {Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})}, p);
}

/// Symmetries of a square, order 8.
inline GroupPtr dihedral8(int p = 0) {
    return enumerate(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})}, p);
}

/// Quaternion group in its regular representation on 8 points.
inline GroupPtr quaternion8(int p = 0) {
    return enumerate(8, {Perm::from_cycles(8, {{0, 1, 3, 6}, {2, 5, 7, 4}}),
                         Perm::from_cycles(8, {{0, 2, 3, 7}, {1, 4, 6, 5}})},
                     p);
}

inline GroupPtr alternating4(int p = 0) {
    return enumerate(4, {Perm::from_cycles(4, {{0, 1, 2}}), Perm::from_cycles(4, {{0, 1}, {2, 3}})}, p);
}

inline GroupPtr z2_x_z4(int p = 0) {
    return enumerate(6, {Perm::from_cycles(6, {{0, 1}}), Perm::from_cycles(6, {{2, 3, 4, 5}})}, p);
}

struct NamedGroup {
    std::string name;
    GroupPtr group;
};

/// The reassembly suite: six groups in characteristic 0 and three modular cases.
inline std::vector<NamedGroup> acceptance_groups() {
    return {
        {"Z/6", cyclic(6)},          {"S3", symmetric3()},        {"D4", dihedral8()},
        {"Q8", quaternion8()},       {"A4", alternating4()},      {"Z/2xZ/4", z2_x_z4()},
        {"Z/6 (p=2)", cyclic(6, 2)}, {"Z/6 (p=3)", cyclic(6, 3)}, {"S3 (p=3)", symmetric3(3)},
    };
}

}  // namespace equichar::groups
