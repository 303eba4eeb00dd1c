#include <gtest/gtest.h>

#include <random>

#include "equichar/class_function.hpp"
#include "equichar/lrr.hpp"
#include "equichar/standard_groups.hpp"

using namespace equichar;

namespace {

Cyclotomic z(std::int64_t n, std::int64_t k = 1) { return Cyclotomic::root_of_unity(n, k); }

// Frobenius formula summed over every t in G, kept separate from the
// class-sum evaluation used by induce().
ClassFunction induce_brute_force(const ClassFunction& f, const SubgroupEmbedding& H) {
    const GroupPtr& G = H.ambient;
    return ClassFunction::from_representatives(G, [&](int g) {
        Cyclotomic acc;
        for (int t = 0; t < G->size(); ++t) {
            int c = G->conjugate(g, t);
            if (H.contains(c)) acc += f.at(H.from_ambient[static_cast<std::size_t>(c)]);
        }
        return acc.scaled(Rational(1, static_cast<long>(H.sub->order())));
    });
}

// Random integer combination of characters induced from cyclic subgroups.
ClassFunction random_virtual(const GroupPtr& G, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    ClassFunction acc = ClassFunction::zero(G);
    for (const auto& s : G->cyclic_subgroup_classes()) {
        SubgroupEmbedding cyc = cyclic_subgroup(G, s.generator);
        for (int j = 0; j < s.order; ++j) {
            int c = coeff(rng);
            if (c != 0) acc += Cyclotomic(c) * induce(cyclic_character(cyc, j), cyc);
        }
    }
    return acc;
}

ClassFunction sign_s3(const GroupPtr& s3) {
    return ClassFunction(s3, {Cyclotomic(1), Cyclotomic(-1), Cyclotomic(1)});
}

}  // namespace

TEST(ClassFunction, ValueCountChecked) {
    auto s3 = groups::symmetric3();
    EXPECT_THROW(ClassFunction(s3, {Cyclotomic(1)}), InvariantError);
    EXPECT_EQ(ClassFunction::regular(s3).values(),
              (std::vector<Cyclotomic>{Cyclotomic(6), Cyclotomic(0), Cyclotomic(0)}));
}

TEST(Restrict, Examples) {
    auto s3 = groups::symmetric3();
    SubgroupEmbedding h = cyclic_subgroup(s3, s3->cyclic_subgroup_classes()[1].generator);
    EXPECT_EQ(restrict(ClassFunction::trivial(s3), h), ClassFunction::trivial(h.sub));
    EXPECT_EQ(restrict(ClassFunction::regular(s3), h).values(), (std::vector<Cyclotomic>{Cyclotomic(6), Cyclotomic(0)}));
    EXPECT_EQ(restrict(sign_s3(s3), h).values(), (std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)}));
}

TEST(Induce, Examples) {
    auto s3 = groups::symmetric3();
    SubgroupEmbedding whole = subgroup(s3, {1, 2});
    ASSERT_EQ(whole.sub->order(), 6u);
    ClassFunction chi = sign_s3(whole.sub);
    EXPECT_EQ(induce(chi, whole).values(), chi.values());

    SubgroupEmbedding one = subgroup(s3, {});
    EXPECT_EQ(induce(ClassFunction::trivial(one.sub), one), ClassFunction::regular(s3));

    SubgroupEmbedding t = cyclic_subgroup(s3, s3->cyclic_subgroup_classes()[1].generator);
    EXPECT_EQ(induce(ClassFunction::trivial(t.sub), t).values(),
              (std::vector<Cyclotomic>{Cyclotomic(3), Cyclotomic(1), Cyclotomic(0)}));
}

TEST(Induce, MatchesBruteForceFrobeniusFormula) {
    std::mt19937 rng(3);
    for (auto G : {groups::symmetric3(), groups::dihedral8(), groups::quaternion8(), groups::alternating4(),
                   groups::cyclic(6, 2), groups::symmetric3(3)}) {
        for (const auto& s : G->cyclic_subgroup_classes()) {
            SubgroupEmbedding c = centralizer(G, s);
            ClassFunction f = random_virtual(c.sub, rng);
            EXPECT_EQ(induce(f, c), induce_brute_force(f, c));
        }
    }
}

TEST(InnerProduct, Examples) {
    auto s3 = groups::symmetric3();
    auto triv = ClassFunction::trivial(s3);
    EXPECT_EQ(inner_product(triv, triv), Cyclotomic(1));
    EXPECT_EQ(inner_product(sign_s3(s3), triv), Cyclotomic(0));
    ClassFunction two(s3, {Cyclotomic(2), Cyclotomic(0), Cyclotomic(-1)});
    for (const auto& chi : {triv, sign_s3(s3), two})
        EXPECT_EQ(inner_product(ClassFunction::regular(s3), chi), chi.degree());
}

TEST(FrobeniusReciprocity, RandomVirtualCharacters) {
    std::mt19937 rng(17);
    for (auto G : {groups::symmetric3(), groups::dihedral8(), groups::cyclic(6), groups::quaternion8()}) {
        for (const auto& s : G->cyclic_subgroup_classes()) {
            for (const auto& H : {cyclic_subgroup(G, s.generator), centralizer(G, s)}) {
                for (int t = 0; t < 3; ++t) {
                    ClassFunction f = random_virtual(H.sub, rng);
                    ClassFunction h = random_virtual(G, rng);
                    EXPECT_EQ(inner_product(induce(f, H), h), inner_product(f, restrict(h, H)));
                }
            }
        }
    }
}

TEST(IsotypicDim, Examples) {
    auto z4 = groups::cyclic(4);
    SubgroupEmbedding all = cyclic_subgroup(z4, 1);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(isotypic_dim(ClassFunction::trivial(z4), 1, i), Rational(i == 0 ? 1 : 0));
        EXPECT_EQ(isotypic_dim(ClassFunction::regular(z4), 1, i), Rational(1));
    }
    auto z2 = groups::cyclic(2);
    ClassFunction sign(z2, {Cyclotomic(1), Cyclotomic(-1)});
    EXPECT_EQ(isotypic_dim(sign, 1, 1), Rational(1));
    EXPECT_EQ(isotypic_dim(sign, 1, 0), Rational(0));
    // A non-character class function on Z/4 has irrational "dimensions".
    ClassFunction bad = ClassFunction::from_representatives(z4, [](int k) { return k == 1 ? z(8) : Cyclotomic(0); });
    EXPECT_THROW(isotypic_dim(bad, 1, 0), DomainError);
    EXPECT_THROW(isotypic_dim(ClassFunction::trivial(groups::cyclic(6, 3)), 1, 0), InvariantError);
}

TEST(IsotypicDim, SumsToDegree) {
    std::mt19937 rng(23);
    for (const auto& [name, G] : groups::acceptance_groups()) {
        for (int t = 0; t < 5; ++t) {
            ClassFunction f = random_virtual(G, rng);
            for (const auto& s : G->cyclic_subgroup_classes()) {
                Rational sum = 0;
                for (int i = 0; i < s.order; ++i) sum += isotypic_dim(f, s, i);
                EXPECT_EQ(Cyclotomic(sum), f.degree()) << name;
            }
        }
    }
}

TEST(GeometricProject, Examples) {
    auto z2 = groups::cyclic(2);
    SubgroupEmbedding whole = cyclic_subgroup(z2, 1);
    ClassFunction unit = ClassFunction::trivial(z2);
    ClassFunction kh_over_h = Cyclotomic(frac(1, 2)) * ClassFunction::regular(z2);
    EXPECT_EQ(geometric_project(unit), kh_over_h);
    ClassFunction sign(z2, {Cyclotomic(1), Cyclotomic(-1)});
    EXPECT_EQ(geometric_project(sign).values(), (std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(0)}));
    EXPECT_EQ(geometric_project(sign), Cyclotomic(frac(1, 2)) * (unit + sign));
    ClassFunction traceless(z2, {Cyclotomic(0), Cyclotomic(3)});
    EXPECT_TRUE(geometric_project(traceless).is_zero());
}

TEST(GeometricProject, IdempotentAndLinear) {
    std::mt19937 rng(29);
    for (const auto& [name, G] : groups::acceptance_groups()) {
        ClassFunction f = random_virtual(G, rng), g = random_virtual(G, rng);
        EXPECT_EQ(geometric_project(geometric_project(f)), geometric_project(f));
        EXPECT_EQ(geometric_project(f + Cyclotomic(3) * g), geometric_project(f) + Cyclotomic(3) * geometric_project(g));
    }
}

TEST(ModularClassFunctions, InduceRestrictCommuteWithRegularRestriction) {
    std::mt19937 rng(31);
    for (int p : {2, 3}) {
        auto G0 = groups::cyclic(6);
        auto Gp = groups::cyclic(6, p);
        for (const auto& s : Gp->cyclic_subgroup_classes()) {
            SubgroupEmbedding H0 = cyclic_subgroup(G0, s.generator);
            SubgroupEmbedding Hp = cyclic_subgroup(Gp, s.generator);
            ClassFunction f0 = random_virtual(H0.sub, rng);
            // Restrict an ordinary class function to the p-regular classes.
            auto to_regular = [](const ClassFunction& f, const GroupPtr& target) {
                return ClassFunction::from_representatives(target, [&](int g) { return f.at(g); });
            };
            ClassFunction fp = to_regular(f0, Hp.sub);
            EXPECT_EQ(induce(fp, Hp), to_regular(induce(f0, H0), Gp));
            ClassFunction h0 = random_virtual(G0, rng);
            EXPECT_EQ(restrict(to_regular(h0, Gp), Hp), to_regular(restrict(h0, H0), Hp.sub));
        }
        EXPECT_EQ(Gp->conjugacy_classes(true).size(), static_cast<std::size_t>(6 / p));
        EXPECT_EQ(ClassFunction::regular(Gp).degree(), Cyclotomic(6));
    }
}

TEST(GaloisStability, InducedCharactersAreStable) {
    std::mt19937 rng(37);
    for (const auto& [name, G] : groups::acceptance_groups()) {
        EXPECT_TRUE(is_galois_stable(random_virtual(G, rng))) << name;
    }
    auto z3 = groups::cyclic(3);
    ClassFunction unstable(z3, {Cyclotomic(1), z(3), z(3)});
    EXPECT_FALSE(is_galois_stable(unstable));
}
