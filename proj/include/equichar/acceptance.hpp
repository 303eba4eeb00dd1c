#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "equichar/character_table.hpp"
#include "equichar/curve.hpp"
#include "equichar/fixtures.hpp"
#include "equichar/lrr.hpp"
#include "equichar/oracle.hpp"
#include "equichar/random.hpp"
#include "equichar/standard_groups.hpp"

// The acceptance suite. Every criterion is an exact equality check.

namespace equichar::acceptance {

struct Result {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

/// Tally of checks with the first few failures kept for the report.
struct Tally {
    long total = 0, good = 0;
    std::vector<std::string> failures;

    void check(bool ok, const std::function<std::string()>& what) {
        ++total;
        if (ok) {
            ++good;
        } else if (failures.size() < 3) {
            failures.push_back(what());
        }
    }
    bool passed() const { return total > 0 && good == total; }
    std::string summary() const {
        std::string s = std::to_string(good) + "/" + std::to_string(total);
        for (const auto& f : failures) s += "; " + f;
        return s;
    }
};

inline std::vector<std::string> grid_specs() {
    std::vector<std::string> specs;
    for (int n = 1; n <= 12; ++n) specs.push_back("cyclic(" + std::to_string(n) + ")");
    for (int n : {3, 5, 7}) specs.push_back("dihedral(" + std::to_string(n) + ")");
    return specs;
}

/// Reduction mod Phi_r of sum_j dim_j x^j, the isotypic dimensions of f on <1>.
inline Cyclotomic project_to_field(const ClassFunction& f, int r) {
    std::vector<Rational> coeffs;
    for (int j = 0; j < r; ++j) coeffs.push_back(isotypic_dim(f, r > 1 ? 1 : 0, j));
    return Cyclotomic(r, coeffs);
}

inline bool orthogonal(const CharacterTable& t) {
    const GroupPtr& G = t.group;
    const auto& classes = G->conjugacy_classes(false);
    for (std::size_t a = 0; a < t.rows.size(); ++a)
        for (std::size_t b = 0; b < t.rows.size(); ++b)
            if (inner_product(t.rows[a], t.rows[b]) != Cyclotomic(a == b ? 1 : 0)) return false;
    for (std::size_t x = 0; x < classes.size(); ++x)
        for (std::size_t y = 0; y < classes.size(); ++y) {
            Cyclotomic acc;
            for (const auto& row : t.rows) acc += row.value(x) * row.value(y).conj();
            const long centralizer = static_cast<long>(G->order() / classes[x].size());
            if (acc != Cyclotomic(x == y ? centralizer : 0)) return false;
        }
    return t.rows.size() == classes.size();
}

}  // namespace detail

inline Result reassembly_identity(std::uint64_t seed = 1) {
    detail::Tally t;
    Lcg rng(seed);
    for (const auto& [name, G] : groups::acceptance_groups()) {
        const auto basis = random_basis(G);
        for (int k = 0; k < 100; ++k) {
            const ClassFunction V = random_virtual_character(G, basis, rng);
            t.check(reassemble(V) == V, [&, n = name] { return n + " trial " + std::to_string(k); });
        }
    }
    return {1, "reassembly identity", t.passed(), t.summary() + " random virtual characters", 0};
}

inline Result oracle_grid() {
    detail::Tally t;
    for (const auto& spec : detail::grid_specs()) {
        const auto G = oracle::build_matrix_group(spec);
        for (int d = -6; d <= 6; ++d) {
            const oracle::Report r = oracle::compare(G, d);
            t.check(r.ok(), [&] { return spec + " d=" + std::to_string(d) + " diff " + r.diff.str(); });
        }
    }
    return {2, "oracle grid", t.passed(), t.summary() + " (group, degree) cells equal", 0};
}

inline Result hyperelliptic_fixtures() {
    detail::Tally t;
    const auto z2 = oracle::build_matrix_group("cyclic(2)");
    const ClassFunction trivial = ClassFunction::trivial(z2.abstract());
    const ClassFunction sign(z2.abstract(), {Cyclotomic(1), Cyclotomic(-1)});
    const oracle::Report r0 = oracle::compare(z2, 0), r2 = oracle::compare(z2, -2);
    t.check(r0.equal && r0.rhs == trivial, [&] { return "d=0 gave " + r0.rhs.str(); });
    t.check(r2.equal && r2.rhs == -sign, [&] { return "d=-2 gave " + r2.rhs.str(); });
    const CurveDatum h = fixtures::hyperelliptic_z2();
    const ClassFunction chi = curve_euler_char(h);
    t.check(chi == ClassFunction::trivial(h.group), [&] { return "hand datum gave " + chi.str(); });
    return {3, "hyperelliptic fixtures", t.passed(), t.summary() + " (d=0 trivial, d=-2 -sign, hand datum)", 0};
}

inline Result wild_fixtures() {
    detail::Tally t;
    for (int p : {2, 3, 5}) {
        const ClassFunction chi = curve_euler_char(fixtures::wild_cyclic(p));
        t.check(chi.values() == std::vector<Cyclotomic>{Cyclotomic(1)},
                [&] { return "p=" + std::to_string(p) + " gave " + chi.str(); });
    }
    return {4, "wild fixture", t.passed(), t.summary() + " primes give the trivial Brauer character", 0};
}

inline Result unit_identity() {
    detail::Tally t;
    for (const auto& [name, G] : groups::acceptance_groups()) {
        for (const auto& s : G->cyclic_subgroup_classes()) {
            const SubgroupEmbedding H = centralizer(G, s);
            const int sh = H.from_ambient[static_cast<std::size_t>(s.generator)];
            const SubgroupEmbedding sigma = cyclic_subgroup(H.sub, sh);
            const Cyclotomic inv_h = frac(1, static_cast<long>(H.sub->order()));
            const ClassFunction unit = inv_h * ClassFunction::regular(H.sub);
            for (int i = 0; i < s.order; ++i)
                t.check(m_push(unit, sh, i) == inv_h * induce(cyclic_character(sigma, i), sigma),
                        [&, n = name] { return n + " sigma " + std::to_string(s.id) + " i=" + std::to_string(i); });
        }
    }
    return {5, "unit identity", t.passed(), t.summary() + " (group, sigma, i) cases", 0};
}

inline Result iota_section() {
    detail::Tally t;
    for (int r = 1; r <= 24; ++r) {
        const auto G = groups::cyclic(r);
        const auto C = cyclic_subgroup(G, r > 1 ? 1 : 0);
        for (int i = 0; i < r; ++i) {
            const ClassFunction f = iota(C, i);
            t.check(detail::project_to_field(f, r) == Cyclotomic::root_of_unity(r, i) && f == iota_via_idempotent(C, i),
                    [&] { return "r=" + std::to_string(r) + " i=" + std::to_string(i); });
        }
    }
    return {6, "iota section", t.passed(), t.summary() + " (r, i) with r <= 24", 0};
}

inline Result lemma_pointwise() {
    detail::Tally t;
    for (int m = 1; m <= 12; ++m) {
        const auto G = groups::cyclic(m);
        for (int j = 1; j <= std::max(1, m - 1); ++j) {
            if (gcd(j, m) != 1) continue;
            const ClassFunction chi =
                ClassFunction::from_representatives(G, [&](int k) { return Cyclotomic::root_of_unity(m, j * k); });
            const ClassFunction inv = invert_one_minus(chi, m);
            for (int h = 1; h < m; ++h)
                t.check((Cyclotomic(1) - chi.at(h)) * inv.at(h) == Cyclotomic(1), [&] {
                    return "m=" + std::to_string(m) + " chi^" + std::to_string(j) + " h=" + std::to_string(h);
                });
        }
    }
    return {7, "inverse of 1 - chi", t.passed(), t.summary() + " pointwise checks, m <= 12", 0};
}

inline Result local_dimension(std::uint64_t seed = 8) {
    detail::Tally t;
    Lcg rng(seed);
    for (int e_t = 1; e_t <= 8; ++e_t) {
        for (int k = 0; k < 50; ++k) {
            const RamifiedOrbit o = fixtures::random_orbit(e_t, rng);
            const long rank = o.fiber.degree().rational().get_num().get_si();
            validate(o, static_cast<int>(rank));
            const Cyclotomic dim = local_term(o).degree();
            t.check(dim == Cyclotomic(frac(-rank * (e_t - 1), 2)),
                    [&] { return "e_t=" + std::to_string(e_t) + " rank " + std::to_string(rank) + " got " + dim.str(); });
        }
    }
    return {8, "local term dimension", t.passed(), t.summary() + " random orbits", 0};
}

inline Result tame_specialization() {
    detail::Tally t;
    for (const auto& spec : detail::grid_specs()) {
        const auto G = oracle::build_matrix_group(spec);
        const oracle::FixedLocus locus = oracle::fixed_locus(G);
        for (int d = -6; d <= 6; ++d) {
            const CurveDatum datum = oracle::extract_curve_datum(G, d, locus);
            const Rational hrr = chi_hrr(d, 1, 0, datum.orbits, G.size());
            t.check(hrr == Rational(d + 1) && datum.chi_global == hrr,
                    [&] { return spec + " d=" + std::to_string(d) + " gave " + to_string(hrr); });
        }
    }
    return {9, "tame specialization", t.passed(), t.summary() + " oracle data", 0};
}

inline Result integrality() {
    detail::Tally grid, tables;
    for (const auto& spec : detail::grid_specs()) {
        const auto G = oracle::build_matrix_group(spec);
        if (G.abstract()->order() > character_table_cap()) continue;
        const CharacterTable table = character_table(G.abstract());
        const oracle::FixedLocus locus = oracle::fixed_locus(G);
        for (int d = -6; d <= 6; ++d) {
            const ClassFunction chi = curve_euler_char(oracle::extract_curve_datum(G, d, locus));
            const Decomposition dec = decompose(chi, table);
            grid.check(dec.integral, [&] { return spec + " d=" + std::to_string(d); });
        }
    }
    const std::vector<std::pair<std::string, GroupPtr>> named = {{"S3", groups::symmetric3()},
                                                                 {"D4", groups::dihedral8()},
                                                                 {"Q8", groups::quaternion8()},
                                                                 {"A4", groups::alternating4()},
                                                                 {"Z/6", groups::cyclic(6)}};
    for (const auto& [name, G] : named)
        tables.check(detail::orthogonal(character_table(G)), [&, n = name] { return n + " table"; });
    const bool ok = grid.passed() && tables.passed();
    return {10, "integrality", ok,
            grid.summary() + " decompositions integral, " + tables.summary() + " tables orthogonal", 0};
}

/// Runs every criterion, timing each; exceptions count as failures.
inline std::vector<Result> run_all() {
    const std::vector<std::function<Result()>> suite = {
        [] { return reassembly_identity(); }, oracle_grid,   hyperelliptic_fixtures,
        wild_fixtures,                         unit_identity, iota_section,
        lemma_pointwise,                       [] { return local_dimension(); },
        tame_specialization,                   integrality};
    std::vector<Result> out;
    for (std::size_t k = 0; k < suite.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = suite[k]();
        } catch (const std::exception& e) {
            r = {static_cast<int>(k) + 1, "criterion " + std::to_string(k + 1), false,
                 std::string("exception: ") + e.what(), 0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

inline std::string format(const Result& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ". " << r.name << ": " << r.detail << " ["
       << std::fixed;
    os.precision(2);
    os << r.seconds << " s]";
    return os.str();
}

}  // namespace equichar::acceptance
