#include <gtest/gtest.h>

#include "equichar/curve.hpp"
#include "equichar/fixtures.hpp"
#include "equichar/standard_groups.hpp"

using namespace equichar;

namespace {

Cyclotomic z(std::int64_t n, std::int64_t k = 1) { return Cyclotomic::root_of_unity(n, k); }

}  // namespace

TEST(InvertOneMinus, Examples) {
    auto z1 = groups::trivial();
    EXPECT_TRUE(invert_one_minus(ClassFunction::trivial(z1), 1).is_zero());

    auto z2 = groups::cyclic(2);
    ClassFunction sign(z2, {Cyclotomic(1), Cyclotomic(-1)});
    EXPECT_EQ(invert_one_minus(sign, 2).values(),
              (std::vector<Cyclotomic>{Cyclotomic(frac(-1, 2)), Cyclotomic(frac(1, 2))}));

    auto z3 = groups::cyclic(3);
    ClassFunction chi = ClassFunction::from_representatives(z3, [](int k) { return z(3, k); });
    ClassFunction inv = invert_one_minus(chi, 3);
    EXPECT_EQ(inv, Cyclotomic(frac(-1, 3)) * (chi + Cyclotomic(2) * chi * chi));
    EXPECT_EQ(inv.at(1), (Cyclotomic(1) - z(3, 2)).scaled(frac(1, 3)));
    EXPECT_EQ(inv.at(1), Cyclotomic(1) / (Cyclotomic(1) - z(3)));
    EXPECT_EQ(inv.degree(), Cyclotomic(-1));
}

TEST(InvertOneMinus, Errors) {
    auto z4 = groups::cyclic(4);
    ClassFunction chi = ClassFunction::from_representatives(z4, [](int k) { return z(4, 2 * k); });
    EXPECT_THROW(invert_one_minus(chi, 4), InvariantError);
    EXPECT_NO_THROW(invert_one_minus(chi, 2));
    EXPECT_THROW(invert_one_minus(ClassFunction::trivial(groups::cyclic(3, 3)), 3), InvariantError);
}

TEST(InvertOneMinus, PointwiseInverse) {
    for (int m = 1; m <= 12; ++m) {
        auto G = groups::cyclic(m);
        for (int j = 1; j < std::max(2, m); ++j) {
            if (gcd(j, m) != 1) continue;
            ClassFunction chi = ClassFunction::from_representatives(G, [&](int k) { return z(m, j * k); });
            ClassFunction inv = invert_one_minus(chi, m);
            for (int h = 1; h < m; ++h) EXPECT_EQ((Cyclotomic(1) - chi.at(h)) * inv.at(h), Cyclotomic(1));
        }
    }
}

TEST(InvertOneMinus, UnweightedSumIsNotAnInverse) {
    // -(1/m) sum_d chi^-d without the weight d is not an inverse of 1 - chi.
    auto G = groups::cyclic(3);
    ClassFunction chi = ClassFunction::from_representatives(G, [](int k) { return z(3, k); });
    ClassFunction plain = Cyclotomic(frac(-1, 3)) * (chi.pow(-1) + chi.pow(-2));
    EXPECT_NE((Cyclotomic(1) - chi.at(1)) * plain.at(1), Cyclotomic(1));
}

TEST(LocalTerm, Examples) {
    auto z1 = groups::trivial();
    EXPECT_TRUE(local_term(fixtures::cyclic_orbit(z1, 0, 1, {0}, 0)).is_zero());

    auto z2 = groups::cyclic(2);
    ClassFunction a = local_term(fixtures::cyclic_orbit(z2, 1, 2, {0}, 1));
    EXPECT_EQ(a.values(), (std::vector<Cyclotomic>{Cyclotomic(frac(-1, 2)), Cyclotomic(frac(1, 2))}));

    auto z3 = groups::cyclic(3);
    EXPECT_EQ(local_term(fixtures::cyclic_orbit(z3, 1, 3, {0}, 1)).degree(), Cyclotomic(-1));
}

TEST(LocalTerm, DimensionFormula) {
    Lcg rng(99);
    for (int e_t = 1; e_t <= 8; ++e_t) {
        for (int t = 0; t < 20; ++t) {
            RamifiedOrbit o = fixtures::random_orbit(e_t, rng);
            int rank = o.fiber.degree().rational().get_num().get_si();
            EXPECT_NO_THROW(validate(o, rank));
            EXPECT_EQ(local_term(o).degree(), Cyclotomic(frac(-rank * (e_t - 1), 2)));
        }
    }
}

TEST(ChiHrr, Examples) {
    EXPECT_EQ(chi_hrr(5, 1, 0, {}, 1), Rational(6));
    auto z2 = groups::cyclic(2);
    auto o2 = fixtures::cyclic_orbit(z2, 1, 2, {0}, 1);
    EXPECT_EQ(chi_hrr(0, 1, 0, {o2, o2}, 2), Rational(1));
    auto z3 = groups::cyclic(3);
    auto o3 = fixtures::cyclic_orbit(z3, 1, 3, {0}, 1);
    EXPECT_EQ(chi_hrr(0, 1, 0, {o3, o3}, 3), Rational(1));
    auto wild = fixtures::wild_cyclic(3);
    EXPECT_THROW(chi_hrr(0, 1, 0, wild.orbits, 3), InvariantError);
}

TEST(CurveEulerChar, TrivialGroup) {
    CurveDatum d;
    d.group = groups::trivial();
    d.chi_global = frac(-4, 1);
    EXPECT_EQ(curve_euler_char(d).values(), (std::vector<Cyclotomic>{Cyclotomic(-4)}));
}

TEST(CurveEulerChar, Hyperelliptic) {
    CurveDatum d = fixtures::hyperelliptic_z2();
    EXPECT_EQ(curve_euler_char(d), ClassFunction::trivial(d.group));
    d.mode = ChiMode::hrr;
    d.deg = 0;
    d.genus_quotient = 0;
    EXPECT_EQ(curve_euler_char(d), ClassFunction::trivial(d.group));
}

TEST(CurveEulerChar, WildFixtures) {
    for (int p : {2, 3, 5}) {
        CurveDatum d = fixtures::wild_cyclic(p);
        ClassFunction chi = curve_euler_char(d);
        ASSERT_EQ(chi.values().size(), 1u);
        EXPECT_EQ(chi.values()[0], Cyclotomic(1)) << p;
        d.mode = ChiMode::hrr;
        EXPECT_THROW(curve_euler_char(d), InvariantError);
    }
}

TEST(CurveEulerChar, DimensionIsGlobalEulerCharacteristic) {
    Lcg rng(5);
    auto G = groups::symmetric3();
    for (int t = 0; t < 10; ++t) {
        CurveDatum d;
        d.group = G;
        d.rank = 1;
        d.chi_global = Rational(rng.uniform(-5, 5));
        const auto& cs = G->cyclic_subgroup_classes();
        d.orbits.push_back(fixtures::cyclic_orbit(G, cs[1].generator, 2, {static_cast<int>(rng.uniform(0, 1))}, 1));
        d.orbits.push_back(fixtures::cyclic_orbit(G, cs[2].generator, 3, {static_cast<int>(rng.uniform(0, 2))}, 1));
        EXPECT_EQ(curve_euler_char(d).degree(), Cyclotomic(d.chi_global));
    }
}

TEST(CurveEulerChar, RejectsInvalidData) {
    CurveDatum d = fixtures::hyperelliptic_z2();
    d.orbits[0].e = 1;
    EXPECT_THROW(curve_euler_char(d), InvariantError);
    d = fixtures::hyperelliptic_z2();
    d.orbits[0].e_t = 1;
    EXPECT_THROW(curve_euler_char(d), InvariantError);
    d = fixtures::hyperelliptic_z2();
    d.rank = 2;
    EXPECT_THROW(curve_euler_char(d), InvariantError);
    d = fixtures::hyperelliptic_z2();
    d.orbits[0].conormal = ClassFunction::trivial(d.orbits[0].stabilizer.sub);
    EXPECT_THROW(curve_euler_char(d), InvariantError);
    // Wild index in characteristic 0.
    auto z4 = groups::cyclic(4);
    CurveDatum w;
    w.group = z4;
    w.orbits = {fixtures::cyclic_orbit(z4, 1, 2, {0}, 1)};
    EXPECT_THROW(curve_euler_char(w), InvariantError);
}
