#include <gtest/gtest.h>

#include <algorithm>

#include "equichar/character_table.hpp"
#include "equichar/standard_groups.hpp"

using namespace equichar;

namespace {

Cyclotomic z(std::int64_t n, std::int64_t k = 1) { return Cyclotomic::root_of_unity(n, k); }

void expect_orthogonal(const CharacterTable& t, const std::string& name) {
    const auto& G = t.group;
    const auto& cls = G->conjugacy_classes(false);
    ASSERT_EQ(t.rows.size(), cls.size()) << name;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows.size(); ++j)
            EXPECT_EQ(inner_product(t.rows[i], t.rows[j]), Cyclotomic(i == j ? 1 : 0)) << name;
    // Second orthogonality: sum_chi chi(g_a) conj(chi(g_b)) = delta_ab |C_G(g_a)|.
    for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = 0; b < cls.size(); ++b) {
            Cyclotomic s;
            for (const auto& chi : t.rows) s += chi.value(a) * chi.value(b).conj();
            long expected = a == b ? static_cast<long>(G->order() / cls[a].size()) : 0;
            EXPECT_EQ(s, Cyclotomic(expected)) << name;
        }
    for (const auto& chi : t.rows) {
        ASSERT_TRUE(chi.degree().is_rational());
        Rational d = chi.degree().rational();
        EXPECT_TRUE(is_integer(d));
        EXPECT_EQ(G->order() % d.get_num().get_ui(), 0u) << name;
    }
    EXPECT_EQ(t.rows[0], ClassFunction::trivial(G)) << name;
}

}  // namespace

TEST(CharacterTable, CyclicOfOrderTwo) {
    auto t = character_table(groups::cyclic(2));
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0].values(), (std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)}));
    EXPECT_EQ(t.rows[1].values(), (std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)}));
}

TEST(CharacterTable, SymmetricThree) {
    auto t = character_table(groups::symmetric3());
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.rows[0].degree(), Cyclotomic(1));
    EXPECT_EQ(t.rows[1].degree(), Cyclotomic(1));
    EXPECT_EQ(t.rows[2].values(), (std::vector<Cyclotomic>{Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)}));
    EXPECT_EQ(t.rows[1].values(), (std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1), Cyclotomic(1)}));
}

TEST(CharacterTable, CyclicOfOrderFour) {
    auto G = groups::cyclic(4);
    auto t = character_table(G);
    ASSERT_EQ(t.rows.size(), 4u);
    // Every row is k -> i^(jk) for some j, each j exactly once.
    std::vector<bool> hit(4, false);
    for (const auto& chi : t.rows) {
        for (int j = 0; j < 4; ++j) {
            bool match = true;
            for (int k = 0; k < 4; ++k) match = match && chi.at(k) == z(4, j * k);
            if (match) hit[static_cast<std::size_t>(j)] = true;
        }
    }
    EXPECT_EQ(std::count(hit.begin(), hit.end(), true), 4);
}

TEST(CharacterTable, Orthogonality) {
    for (const auto& [name, G] : std::vector<groups::NamedGroup>{{"S3", groups::symmetric3()},
                                                                 {"D4", groups::dihedral8()},
                                                                 {"Q8", groups::quaternion8()},
                                                                 {"A4", groups::alternating4()},
                                                                 {"Z/6", groups::cyclic(6)},
                                                                 {"Z/2xZ/4", groups::z2_x_z4()},
                                                                 {"Z/12", groups::cyclic(12)}})
        expect_orthogonal(character_table(G), name);
}

TEST(CharacterTable, LargerGroups) {
    auto s4 = enumerate(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
    auto t = character_table(s4);
    expect_orthogonal(t, "S4");
    std::vector<long> degrees;
    for (const auto& chi : t.rows) degrees.push_back(chi.degree().rational().get_num().get_si());
    EXPECT_EQ(degrees, (std::vector<long>{1, 1, 2, 3, 3}));
    auto a5 = enumerate(5, {Perm::from_cycles(5, {{0, 1, 2}}), Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
    auto t5 = character_table(a5);
    expect_orthogonal(t5, "A5");
    EXPECT_EQ(t5.rows.size(), 5u);
}

TEST(CharacterTable, Errors) {
    EXPECT_THROW(character_table(groups::symmetric3(3)), InvariantError);
    auto s6 = enumerate(6, {Perm::from_cycles(6, {{0, 1}}), Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})});
    EXPECT_THROW(character_table(s6), CapError);
}

TEST(DixonPrime, CongruentAndLarge) {
    auto l = dixon_prime(12, 24, 1000);
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(*l % 12, 1);
    EXPECT_GT(*l, 48);
    EXPECT_FALSE(dixon_prime(12, 24, 50).has_value());
}

TEST(Decompose, Examples) {
    auto G = groups::symmetric3();
    auto t = character_table(G);
    auto reg = decompose(ClassFunction::regular(G), t);
    EXPECT_EQ(reg.multiplicities, (std::vector<Rational>{1, 1, 2}));
    EXPECT_TRUE(reg.integral);
    auto triv = decompose(ClassFunction::trivial(G), t);
    EXPECT_EQ(triv.multiplicities, (std::vector<Rational>{1, 0, 0}));
    auto geo = decompose(Cyclotomic(frac(1, 6)) * ClassFunction::regular(G), t);
    EXPECT_EQ(geo.multiplicities, (std::vector<Rational>{frac(1, 6), frac(1, 6), frac(1, 3)}));
    EXPECT_FALSE(geo.integral);
}
