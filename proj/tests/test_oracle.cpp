#include <gtest/gtest.h>

#include "equichar/character_table.hpp"
#include "equichar/oracle.hpp"

using namespace equichar;
using namespace equichar::oracle;

namespace {

ClassFunction sign_of(const GroupPtr& G) {
    return ClassFunction::from_representatives(G, [&](int g) { return Cyclotomic(g == 0 ? 1 : -1); });
}

/// Brute-force trace of g on Sym^d V^dual in the original (non-diagonal)
/// coordinates: expand f(g^-1 x) for every monomial f and read off the
/// diagonal coefficient.
Cyclotomic sym_trace(const Matrix2& g, int d) {
    Matrix2 h;  // g^-1
    const Cyclotomic det = g.det();
    h.a = g.d / det;
    h.b = -g.b / det;
    h.c = -g.c / det;
    h.d = g.a / det;
    // u o h = h.a u + h.b v, v o h = h.c u + h.d v
    Cyclotomic total;
    for (int a = 0; a <= d; ++a) {
        // coefficient of u^a v^(d-a) in (h.a u + h.b v)^a (h.c u + h.d v)^(d-a)
        std::vector<Cyclotomic> poly{Cyclotomic(1)};  // index = power of u
        auto times = [&](const Cyclotomic& cu, const Cyclotomic& cv) {
            std::vector<Cyclotomic> next(poly.size() + 1);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k] * cu;
                next[k] += poly[k] * cv;
            }
            poly = std::move(next);
        };
        for (int k = 0; k < a; ++k) times(h.a, h.b);
        for (int k = 0; k < d - a; ++k) times(h.c, h.d);
        total += poly[static_cast<std::size_t>(a)];
    }
    return total;
}

}  // namespace

TEST(ParseCyclotomic, RoundTrips) {
    for (const auto& c : {Cyclotomic(0), Cyclotomic(frac(-3, 7)), Cyclotomic::root_of_unity(5, 2),
                          Cyclotomic(7, {Rational(1), frac(-2, 3), Rational(5)}),
                          Cyclotomic::root_of_unity(12, 5) - Cyclotomic(2)})
        EXPECT_EQ(parse_cyclotomic(c.str()), c) << c.str();
    EXPECT_EQ(parse_cyclotomic("z4^-1"), Cyclotomic::root_of_unity(4, 3));
    EXPECT_EQ(parse_cyclotomic("z3 + z3^2"), Cyclotomic(-1));
    EXPECT_THROW(parse_cyclotomic(""), ParseError);
    EXPECT_THROW(parse_cyclotomic("q3"), ParseError);
    EXPECT_THROW(parse_cyclotomic("1+"), ParseError);
    EXPECT_THROW(parse_cyclotomic("z0"), ParseError);
}

TEST(MatrixGroup, Construction) {
    EXPECT_EQ(build_matrix_group("cyclic(1)").size(), 1);
    auto c6 = build_matrix_group("cyclic(6)");
    EXPECT_EQ(c6.size(), 6);
    EXPECT_TRUE(c6.abstract()->is_abelian());
    auto d3 = build_matrix_group("dihedral(3)");
    EXPECT_EQ(d3.size(), 6);
    std::vector<std::size_t> sizes;
    for (const auto& c : d3.abstract()->conjugacy_classes(false)) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
    for (const char* spec : {"cyclic(5)", "dihedral(5)", "dihedral(7)"}) {
        auto G = build_matrix_group(spec);
        const GroupPtr& A = G.abstract();
        for (int a = 0; a < A->size(); ++a)
            for (int b = 0; b < A->size(); ++b) ASSERT_EQ(G.matrix(A->mul(a, b)), G.matrix(a) * G.matrix(b));
    }
}

TEST(MatrixGroup, Errors) {
    EXPECT_THROW(build_matrix_group("dihedral(4)"), InvariantError);
    EXPECT_THROW(build_matrix_group("cyclic(0)"), ParseError);
    EXPECT_THROW(build_matrix_group("torus(3)"), ParseError);
    EXPECT_THROW(build_matrix_group("matrices([z4, 0; 0, z4])"), InvariantError);  // scalar
    const std::size_t cap = group_order_cap();
    group_order_cap() = 500;
    EXPECT_THROW(build_matrix_group("matrices([2, 0; 0, 1])"), CapError);  // infinite
    group_order_cap() = cap;
    EXPECT_THROW(build_matrix_group("matrices()"), ParseError);
}

TEST(MatrixGroup, ExplicitGenerators) {
    // A non-diagonal Z/3: the companion matrix of x^2 + x + 1.
    auto G = build_matrix_group("matrices([0, -1; 1, -1])");
    EXPECT_EQ(G.size(), 3);
    for (int d = -6; d <= 6; ++d) EXPECT_TRUE(compare(G, d).ok()) << d;
    // The binary dihedral lift of S3 is not scalar-free; its image in PGL2 is
    // generated by an order-3 rotation and a reflection.
    auto S3 = build_matrix_group("matrices([0, -1; 1, -1], [0, 1; 1, 0])");
    EXPECT_EQ(S3.size(), 6);
    for (int d = -6; d <= 6; ++d) EXPECT_TRUE(compare(S3, d).ok()) << d;
}

TEST(Cohomology, MatchesMonomialExpansion) {
    for (const char* spec : {"cyclic(4)", "dihedral(3)", "matrices([0, -1; 1, -1], [0, 1; 1, 0])"}) {
        auto G = build_matrix_group(spec);
        for (int d = 0; d <= 5; ++d) {
            ClassFunction chi = cohomology_character(G, d);
            for (int g = 0; g < G.size(); ++g) EXPECT_EQ(chi.at(g), sym_trace(G.matrix(g), d)) << spec << " " << d;
        }
    }
}

TEST(Cohomology, Fixtures) {
    auto z1 = build_matrix_group("cyclic(1)");
    for (int d = 0; d <= 4; ++d) EXPECT_EQ(cohomology_character(z1, d).values()[0], Cyclotomic(d + 1));
    auto z2 = build_matrix_group("cyclic(2)");
    EXPECT_EQ(cohomology_character(z2, 0), ClassFunction::trivial(z2.abstract()));
    EXPECT_EQ(cohomology_character(z2, -2), -sign_of(z2.abstract()));
    EXPECT_TRUE(cohomology_character(z2, -1).is_zero());
}

TEST(Cohomology, DimensionAndSerreDuality) {
    for (const char* spec : {"cyclic(3)", "cyclic(8)", "dihedral(5)"}) {
        auto G = build_matrix_group(spec);
        for (int d = -7; d <= 7; ++d) {
            EXPECT_EQ(cohomology_character(G, d).degree(), Cyclotomic(d + 1));
            EXPECT_TRUE(serre_duality_holds(G, d)) << spec << " " << d;
        }
    }
    // Without the det twist the identity fails on cyclic(3).
    auto G = build_matrix_group("cyclic(3)");
    auto a = cohomology_character(G, 1), b = cohomology_character(G, -3);
    EXPECT_NE(a.at(1) + b.at(G.abstract()->inv(1)), Cyclotomic(0));
}

TEST(CurveDatum, Cyclic2) {
    auto G = build_matrix_group("cyclic(2)");
    CurveDatum d = extract_curve_datum(G, 0);
    ASSERT_EQ(d.orbits.size(), 2u);
    for (const auto& o : d.orbits) {
        EXPECT_EQ(o.e, 2);
        EXPECT_EQ(o.fiber, ClassFunction::trivial(o.stabilizer.sub));
        EXPECT_EQ(o.conormal, sign_of(o.stabilizer.sub));
    }
    EXPECT_EQ(d.chi_global, Rational(1));
    EXPECT_TRUE(extract_curve_datum(build_matrix_group("cyclic(1)"), 3).orbits.empty());
}

TEST(CurveDatum, Dihedral3Orbits) {
    auto G = build_matrix_group("dihedral(3)");
    FixedLocus locus = fixed_locus(G);
    EXPECT_EQ(locus.points.size(), 8u);  // {0, inf} and two lines for each of three reflections
    std::vector<int> es;
    for (const auto& o : extract_curve_datum(G, 0, locus).orbits) es.push_back(o.e);
    std::sort(es.begin(), es.end());
    // The reflection-fixed lines [1 : +-zeta^k] split into two orbits of three.
    EXPECT_EQ(es, (std::vector<int>{2, 2, 3}));
}

TEST(Compare, Fixtures) {
    auto z2 = build_matrix_group("cyclic(2)");
    Report r0 = compare(z2, 0);
    EXPECT_TRUE(r0.ok());
    EXPECT_EQ(r0.rhs, ClassFunction::trivial(z2.abstract()));
    Report r2 = compare(z2, -2);
    EXPECT_TRUE(r2.ok());
    EXPECT_EQ(r2.rhs, -sign_of(z2.abstract()));
    for (int n = 1; n <= 12; ++n) {
        auto G = build_matrix_group("cyclic(" + std::to_string(n) + ")");
        EXPECT_EQ(compare(G, 0).rhs, ClassFunction::trivial(G.abstract())) << n;
    }
}

TEST(Compare, GridAndIntegrality) {
    std::vector<std::string> specs;
    for (int n = 1; n <= 12; ++n) specs.push_back("cyclic(" + std::to_string(n) + ")");
    for (int n : {3, 5, 7}) specs.push_back("dihedral(" + std::to_string(n) + ")");
    for (const auto& spec : specs) {
        auto G = build_matrix_group(spec);
        CharacterTable table = character_table(G.abstract());
        for (int d = -6; d <= 6; ++d) {
            Report r = compare(G, d);
            EXPECT_TRUE(r.equal) << spec << " d=" << d << " diff " << r.diff.str();
            EXPECT_TRUE(r.sectors_equal) << spec << " d=" << d;
            EXPECT_TRUE(r.remark_holds) << spec;
            EXPECT_TRUE(r.orbit_count_holds) << spec;
            EXPECT_TRUE(r.serre_duality_holds) << spec;
            CurveDatum datum = extract_curve_datum(G, d);
            datum.mode = ChiMode::hrr;
            EXPECT_EQ(global_euler_char(datum), Rational(d + 1)) << spec << " d=" << d;
            EXPECT_TRUE(decompose(r.rhs, table).integral) << spec << " d=" << d;
        }
    }
}
