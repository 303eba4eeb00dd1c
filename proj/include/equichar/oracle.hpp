#pragma once

#include <algorithm>
#include <functional>
#include <cstdint>
#include <map>
#include <regex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "equichar/class_function.hpp"
#include "equichar/curve.hpp"
#include "equichar/cyclotomic.hpp"
#include "equichar/error.hpp"
#include "equichar/group.hpp"
#include "equichar/lrr.hpp"

// Ground truth on the projective line: a finite group of 2x2 matrices in
// characteristic 0 acting on P^1 = P(V), V = K^2.
//
// Conventions, fixed once:
//  * g acts on sections by f -> f o g^-1, so the coordinate forms u, v of an
//    eigenbasis with eigenvalues (alpha, beta) pick up alpha^-1, beta^-1.
//  * The fiber of O(-1) at a line L is L, so g in G_L acts on the fiber of
//    O(d) by mu^-d, where mu is the eigenvalue on L.
//  * The cotangent line at L is Hom(V/L, L), with character mu/nu, where
//    nu = det/mu is the other eigenvalue.

namespace equichar::oracle {

struct Matrix2 {
    Cyclotomic a = 1, b = 0, c = 0, d = 1;

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Matrix2& x, const Matrix2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    Cyclotomic trace() const { return a + d; }
    Cyclotomic det() const { return a * d - b * c; }
    bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
    bool is_identity() const { return is_scalar() && a == Cyclotomic(1); }

    /// Canonical text at a fixed conductor, used as a hash key.
    std::string key(std::int64_t conductor) const {
        std::string k;
        for (const Cyclotomic* e : {&a, &b, &c, &d}) k += e->lift(conductor).str() + "|";
        return k;
    }
    std::string str() const { return "[" + a.str() + ", " + b.str() + "; " + c.str() + ", " + d.str() + "]"; }
};

/// A point of P^1 with coordinates normalized to (1, y) or (0, 1).
struct Line {
    Cyclotomic x0, x1;

    static Line through(const Cyclotomic& u, const Cyclotomic& v) {
        if (u.is_zero()) {
            if (v.is_zero()) throw InvariantError("zero vector does not span a line");
            return {Cyclotomic(0), Cyclotomic(1)};
        }
        return {Cyclotomic(1), v / u};
    }
    Line image(const Matrix2& g) const { return through(g.a * x0 + g.b * x1, g.c * x0 + g.d * x1); }
    /// The eigenvalue of g on this line; g must fix it.
    Cyclotomic eigenvalue(const Matrix2& g) const {
        if (!x0.is_zero()) return (g.a * x0 + g.b * x1) / x0;
        return g.c * x0 + g.d * x1;  // x1 = 1
    }
    std::string key(std::int64_t conductor) const {
        return x0.is_zero() ? std::string("inf") : x1.lift(conductor).str();
    }
    std::string str() const { return "[" + x0.str() + " : " + x1.str() + "]"; }
};

/// Eigenvalues zeta_m^i, zeta_m^j of an element of order m (i <= j).
struct Eigen {
    std::int64_t m = 1, i = 0, j = 0;
};

/// A finite matrix group with its abstract permutation model. Element k of
/// abstract() is the matrix matrix(k); products agree.
class MatrixGroup {
public:
    static MatrixGroup generate(std::string name, const std::vector<Matrix2>& generators) {
        MatrixGroup G;
        G.name_ = std::move(name);
        G.conductor_ = 1;
        for (const auto& g : generators)
            for (const Cyclotomic* e : {&g.a, &g.b, &g.c, &g.d}) G.conductor_ = lcm(G.conductor_, e->conductor());
        for (const auto& g : generators)
            if (g.det().is_zero()) throw InvariantError("generator " + g.str() + " is singular");

        // Breadth-first closure x -> g * x from the identity.
        std::vector<Matrix2> elems{Matrix2{}};
        std::unordered_map<std::string, int> index{{elems[0].key(G.conductor_), 0}};
        for (std::size_t head = 0; head < elems.size(); ++head) {
            for (const auto& g : generators) {
                Matrix2 y = g * elems[head];
                auto [it, inserted] = index.emplace(y.key(G.conductor_), static_cast<int>(elems.size()));
                if (!inserted) continue;
                if (elems.size() >= group_order_cap())
                    throw CapError("matrix group exceeds the order cap of " + std::to_string(group_order_cap()) +
                                   " (infinite or too large)");
                elems.push_back(std::move(y));
            }
        }
        for (std::size_t k = 1; k < elems.size(); ++k)
            if (elems[k].is_scalar())
                throw InvariantError("scalar matrix " + elems[k].str() + " acts trivially on P^1");

        // Left-regular action: rho(g)(i) = index of g * x_i. Then rho(g)(0) is g.
        const int n = static_cast<int>(elems.size());
        auto rho = [&](const Matrix2& g) {
            std::vector<int> img(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = index.at((g * elems[static_cast<std::size_t>(i)]).key(G.conductor_));
            return Perm(std::move(img));
        };
        std::vector<Perm> perms;
        for (const auto& g : generators) perms.push_back(rho(g));
        if (perms.empty()) perms.push_back(Perm::identity(n));
        G.abstract_ = enumerate(n, std::move(perms), 0);
        for (const auto& p : G.abstract_->elements()) G.matrices_.push_back(elems[static_cast<std::size_t>(p(0))]);
        G.eigen_.resize(G.matrices_.size());
        for (int k = 0; k < n; ++k) G.eigen_[static_cast<std::size_t>(k)] = G.find_eigen(k);
        return G;
    }

    const std::string& name() const { return name_; }
    const GroupPtr& abstract() const { return abstract_; }
    int size() const { return abstract_->size(); }
    const Matrix2& matrix(int k) const { return matrices_[static_cast<std::size_t>(k)]; }
    const Eigen& eigen(int k) const { return eigen_[static_cast<std::size_t>(k)]; }
    /// Common conductor of entries, eigenvalues and eigenvectors.
    std::int64_t conductor() const { return lcm(conductor_, abstract_->exponent()); }

private:
    Eigen find_eigen(int k) const {
        const Matrix2& g = matrix(k);
        const std::int64_t m = abstract_->element_order(k);
        const Cyclotomic tr = g.trace(), det = g.det();
        for (std::int64_t i = 0; i < m; ++i)
            for (std::int64_t j = i; j < m; ++j)
                if (Cyclotomic::root_of_unity(m, i) + Cyclotomic::root_of_unity(m, j) == tr &&
                    Cyclotomic::root_of_unity(m, i + j) == det)
                    return {m, i, j};
        throw InvariantError("no root-of-unity eigenvalues for " + g.str());
    }

    std::string name_;
    std::int64_t conductor_ = 1;
    GroupPtr abstract_;
    std::vector<Matrix2> matrices_;
    std::vector<Eigen> eigen_;
};

/// cyclic(n) = <diag(1, zeta_n)>, dihedral(n) = <diag(zeta_n, zeta_n^-1), antidiag(1, 1)>
/// for odd n, or matrices([a, b; c, d], ...) with entries in Cyclotomic::str() syntax.
inline MatrixGroup build_matrix_group(const std::string& spec) {
    static const std::regex named(R"(\s*(cyclic|dihedral)\s*\(\s*(\d+)\s*\)\s*)");
    static const std::regex explicit_gens(R"(\s*matrices\s*\((.*)\)\s*)");
    static const std::regex one_matrix(R"(\[([^\];,]+),([^\];,]+);([^\];,]+),([^\];,]+)\])");
    std::smatch m;
    if (std::regex_match(spec, m, named)) {
        long n = 0;
        try {
            n = std::stol(m[2].str());
        } catch (const std::exception&) {
            throw ParseError("group size out of range in '" + spec + "'");
        }
        if (n < 1) throw ParseError("group size must be positive in '" + spec + "'");
        if (static_cast<std::size_t>(n) > group_order_cap() / 2)
            throw CapError("'" + spec + "' exceeds the group order cap");
        const Cyclotomic z = Cyclotomic::root_of_unity(n), zi = Cyclotomic::root_of_unity(n, -1);
        if (m[1] == "cyclic") return MatrixGroup::generate(spec, {Matrix2{1, 0, 0, z}});
        if (n % 2 == 0) throw InvariantError("dihedral(n) contains -1 for even n; only odd n acts effectively");
        return MatrixGroup::generate(spec, {Matrix2{z, 0, 0, zi}, Matrix2{0, 1, 1, 0}});
    }
    if (std::regex_match(spec, m, explicit_gens)) {
        std::vector<Matrix2> gens;
        const std::string body = m[1].str();
        for (auto it = std::sregex_iterator(body.begin(), body.end(), one_matrix); it != std::sregex_iterator(); ++it) {
            const auto& mm = *it;
            gens.push_back({parse_cyclotomic(mm[1].str()), parse_cyclotomic(mm[2].str()),
                            parse_cyclotomic(mm[3].str()), parse_cyclotomic(mm[4].str())});
        }
        if (gens.empty()) throw ParseError("no [a, b; c, d] matrices in '" + spec + "'");
        return MatrixGroup::generate(spec, gens);
    }
    throw ParseError("unknown group spec '" + spec + "'; expected cyclic(n), dihedral(n) or matrices(...)");
}

/// Character of [H^0(P^1, O(d))] - [H^1(P^1, O(d))] on the abstract group.
inline ClassFunction cohomology_character(const MatrixGroup& G, std::int64_t d) {
    return ClassFunction::from_representatives(G.abstract(), [&](int k) {
        const Eigen& e = G.eigen(k);
        Cyclotomic acc;
        if (d >= 0) {
            // H^0: monomials u^a v^b, a + b = d, with eigenvalue alpha^-a beta^-b.
            for (std::int64_t a = 0; a <= d; ++a) acc += Cyclotomic::root_of_unity(e.m, -a * e.i - (d - a) * e.j);
        } else if (d <= -2) {
            // H^1: Cech monomials u^-a v^-b, a, b >= 1, a + b = -d.
            for (std::int64_t a = 1; a <= -d - 1; ++a) acc -= Cyclotomic::root_of_unity(e.m, a * e.i + (-d - a) * e.j);
        }
        return acc;
    });
}

/// det as a 1-dimensional character of the abstract group.
inline ClassFunction det_character(const MatrixGroup& G) {
    return ClassFunction::from_representatives(G.abstract(), [&](int k) { return G.matrix(k).det(); });
}

/// A line with nontrivial stabilizer, with the eigenvalue characters on it.
struct FixedPointRecord {
    Line line;
    std::vector<int> stabilizer;  // abstract element indices, identity first
    std::vector<Cyclotomic> mu;   // eigenvalue on the line, per stabilizer element
    std::vector<Cyclotomic> nu;   // eigenvalue on the complement
};

/// Eigenlines of all non-identity elements, in order of first discovery,
/// grouped into G-orbits (orbit representatives first within each orbit).
struct FixedLocus {
    std::vector<FixedPointRecord> points;
    std::vector<std::vector<int>> orbits;  // indices into points
};

inline FixedLocus fixed_locus(const MatrixGroup& G) {
    const std::int64_t L = G.conductor();
    FixedLocus out;
    std::map<std::string, int> seen;
    auto add_line = [&](const Line& x) {
        auto [it, inserted] = seen.emplace(x.key(L), static_cast<int>(out.points.size()));
        if (inserted) out.points.push_back({x, {}, {}, {}});
        return it->second;
    };
    for (int k = 1; k < G.size(); ++k) {
        const Matrix2& g = G.matrix(k);
        const Eigen& e = G.eigen(k);
        for (std::int64_t ex : {e.i, e.j}) {
            const Cyclotomic mu = Cyclotomic::root_of_unity(e.m, ex);
            // (g - mu) x = 0. g is not scalar, so one of these is nonzero.
            Line x = !g.b.is_zero()   ? Line::through(g.b, mu - g.a)
                     : mu == g.d && !(mu == g.a) ? Line{Cyclotomic(0), Cyclotomic(1)}
                                                  : Line::through(g.a - g.d, g.c);
            if (!(x.image(g).key(L) == x.key(L)) || !(x.eigenvalue(g) == mu))
                throw InvariantError("eigenline computation failed for " + g.str());
            add_line(x);
        }
    }
    for (auto& pt : out.points) {
        for (int k = 0; k < G.size(); ++k) {
            if (pt.line.image(G.matrix(k)).key(L) != pt.line.key(L)) continue;
            const Cyclotomic mu = pt.line.eigenvalue(G.matrix(k));
            pt.stabilizer.push_back(k);
            pt.mu.push_back(mu);
            pt.nu.push_back(G.matrix(k).det() / mu);
        }
    }
    std::vector<bool> assigned(out.points.size(), false);
    for (std::size_t p = 0; p < out.points.size(); ++p) {
        if (assigned[p]) continue;
        std::vector<int> orbit{static_cast<int>(p)};
        assigned[p] = true;
        for (int k = 0; k < G.size(); ++k) {
            const int q = seen.at(out.points[p].line.image(G.matrix(k)).key(L));
            if (!assigned[static_cast<std::size_t>(q)]) {
                assigned[static_cast<std::size_t>(q)] = true;
                orbit.push_back(q);
            }
        }
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

/// Restricts a per-stabilizer-element value table to a class function on G_x.
inline ClassFunction stabilizer_character(const SubgroupEmbedding& Gx, const FixedPointRecord& pt,
                                          const std::function<Cyclotomic(std::size_t)>& value) {
    return ClassFunction::from_representatives(Gx.sub, [&](int h) {
        const int g = Gx.image(h);
        const auto pos = std::find(pt.stabilizer.begin(), pt.stabilizer.end(), g) - pt.stabilizer.begin();
        return value(static_cast<std::size_t>(pos));
    });
}

/// The curve datum of (P^1, O(d)): one orbit per G-orbit of lines with
/// nontrivial stabilizer; chi = d + 1 in direct mode.
inline CurveDatum extract_curve_datum(const MatrixGroup& G, std::int64_t d, const FixedLocus& locus) {
    CurveDatum datum;
    datum.group = G.abstract();
    datum.rank = 1;
    datum.mode = ChiMode::direct;
    datum.chi_global = Rational(d + 1);
    datum.deg = d;
    datum.genus_quotient = 0;
    for (const auto& orbit : locus.orbits) {
        const FixedPointRecord& pt = locus.points[static_cast<std::size_t>(orbit.front())];
        RamifiedOrbit o;
        o.stabilizer = subgroup(G.abstract(), pt.stabilizer);
        o.e = o.e_t = o.stabilizer.sub->size();
        o.fiber = stabilizer_character(o.stabilizer, pt, [&](std::size_t k) { return pt.mu[k].pow(-d); });
        o.conormal = stabilizer_character(o.stabilizer, pt, [&](std::size_t k) { return pt.mu[k] / pt.nu[k]; });
        datum.orbits.push_back(std::move(o));
    }
    return datum;
}

inline CurveDatum extract_curve_datum(const MatrixGroup& G, std::int64_t d) {
    return extract_curve_datum(G, d, fixed_locus(G));
}

/// Sector data read off the fixed loci: q_{1,0} = d + 1 and, for sigma = <s>
/// nontrivial, q_{sigma,i} = sum over lines x fixed by s of the chi^i-isotypic
/// dimension of the local term at x restricted to <s>.
inline SectorData sector_data_from_fixed_points(const MatrixGroup& G, std::int64_t d, const FixedLocus& locus) {
    const GroupPtr& A = G.abstract();
    SectorData data = empty_sector_data(A);
    for (auto& entry : data.entries) {
        const auto& sigma = A->cyclic_subgroup_classes()[static_cast<std::size_t>(entry.sigma)];
        if (sigma.order == 1) {
            entry.q[0] = Rational(d + 1);
            continue;
        }
        SubgroupEmbedding cyc = cyclic_subgroup(A, entry.generator);
        for (const auto& pt : locus.points) {
            if (std::find(pt.stabilizer.begin(), pt.stabilizer.end(), entry.generator) == pt.stabilizer.end()) continue;
            const Rational dim = frac(-(static_cast<long>(pt.stabilizer.size()) - 1), 2);
            ClassFunction local = ClassFunction::from_representatives(cyc.sub, [&](int h) -> Cyclotomic {
                if (h == 0) return dim;
                const auto pos = static_cast<std::size_t>(
                    std::find(pt.stabilizer.begin(), pt.stabilizer.end(), cyc.image(h)) - pt.stabilizer.begin());
                return pt.mu[pos].pow(-d) / (Cyclotomic(1) - pt.mu[pos] / pt.nu[pos]);
            });
            for (int i = 0; i < sigma.order; ++i) entry.q[static_cast<std::size_t>(i)] += isotypic_dim(local, 1, i);
        }
    }
    return data;
}

struct Report {
    std::string group;
    std::int64_t d = 0;
    ClassFunction lhs;   // cohomology
    ClassFunction rhs;   // curve formula
    ClassFunction diff;  // lhs - rhs
    bool equal = false;
    bool sectors_equal = false;      // sector data from fixed loci reassembles to lhs
    bool remark_holds = false;       // |X^s|/|C(s)| = sum over C(s)-orbits of 1/|C_{G_x}(s)|
    bool orbit_count_holds = false;  // sum over orbits of n/e = number of lines
    bool serre_duality_holds = false;
    bool ok() const { return equal && sectors_equal && remark_holds && orbit_count_holds && serre_duality_holds; }
};

/// chi(d)(g) + det(g) chi(-2-d)(g^-1) = 0.
inline bool serre_duality_holds(const MatrixGroup& G, std::int64_t d) {
    const ClassFunction a = cohomology_character(G, d), b = cohomology_character(G, -2 - d);
    const GroupPtr& A = G.abstract();
    for (const auto& cls : A->conjugacy_classes(false)) {
        const int g = cls.representative;
        if (!(a.at(g) + G.matrix(g).det() * b.at(A->inv(g))).is_zero()) return false;
    }
    return true;
}

inline bool remark_holds(const MatrixGroup& G, const FixedLocus& locus) {
    const GroupPtr& A = G.abstract();
    const std::int64_t L = G.conductor();
    for (const auto& sigma : A->cyclic_subgroup_classes()) {
        if (sigma.order == 1) continue;
        const SubgroupEmbedding C = centralizer(A, sigma);
        std::vector<const FixedPointRecord*> fixed;
        for (const auto& pt : locus.points)
            if (std::find(pt.stabilizer.begin(), pt.stabilizer.end(), sigma.generator) != pt.stabilizer.end())
                fixed.push_back(&pt);
        Rational lhs = frac(static_cast<long>(fixed.size()), C.sub->size());
        Rational rhs = 0;
        std::vector<bool> done(fixed.size(), false);
        for (std::size_t p = 0; p < fixed.size(); ++p) {
            if (done[p]) continue;
            for (int c = 0; c < C.sub->size(); ++c) {
                const std::string img = fixed[p]->line.image(G.matrix(C.image(c))).key(L);
                for (std::size_t q = 0; q < fixed.size(); ++q)
                    if (fixed[q]->line.key(L) == img) done[q] = true;
            }
            long cg = 0;
            for (int g : fixed[p]->stabilizer) cg += C.contains(g) ? 1 : 0;
            rhs += frac(1, cg);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

inline Report compare(const MatrixGroup& G, std::int64_t d) {
    const FixedLocus locus = fixed_locus(G);
    Report r;
    r.group = G.name();
    r.d = d;
    r.lhs = cohomology_character(G, d);
    r.rhs = curve_euler_char(extract_curve_datum(G, d, locus));
    r.diff = r.lhs - r.rhs;
    r.equal = r.diff.is_zero();
    r.sectors_equal = assemble_sectors(sector_data_from_fixed_points(G, d, locus)) == r.lhs;
    r.remark_holds = remark_holds(G, locus);
    std::size_t counted = 0;
    for (const auto& orbit : locus.orbits)
        counted += static_cast<std::size_t>(G.size()) /
                   locus.points[static_cast<std::size_t>(orbit.front())].stabilizer.size();
    r.orbit_count_holds = counted == locus.points.size();
    r.serre_duality_holds = serre_duality_holds(G, d);
    return r;
}

}  // namespace equichar::oracle
