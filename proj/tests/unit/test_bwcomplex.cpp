#include <gtest/gtest.h>

#include "bwcohom/bwcomplex.hpp"
#include "bwcohom/errors.hpp"
#include "bwcohom/generators.hpp"
#include "oracles.hpp"

using namespace bwc;

namespace {

SystemPtr constant(const CatPtr& c, const Integer& modulus)
{
    return make_system(constant_system(build_factorization(c), make_group(PresentedGroup::cyclic(modulus))));
}

GroupInvariants elementary(unsigned p, std::size_t dim)
{
    GroupInvariants g;
    g.torsion.assign(dim, Integer(p));
    return g;
}

void expect_nerve_oracle(const CatPtr& c, std::size_t top, const std::string& label)
{
    auto fz = oracle::nerve_complex(*c, top);
    auto hz = cohomology_all(*build_complex(constant(c, 0), top));
    auto h2 = cohomology_all(*build_complex(constant(c, 2), top));
    for (std::size_t k = 0; k < top; ++k) {
        EXPECT_EQ(hz[k], oracle::integer_cohomology(fz, k)) << label << " H" << k << " with Z";
        EXPECT_EQ(h2[k], elementary(2, oracle::mod_p_cohomology(fz, k, 2))) << label << " H" << k << " with Z/2";
    }
}

} // namespace

TEST(CochainComplex, DifferentialsSquareToZero)
{
    Rng rng(41);
    for (int i = 0; i < 80; ++i) {
        auto g = random_category(rng, 6);
        auto s = random_system(rng, build_factorization(g.category));
        auto c = build_complex(s.system, 4, true);
        for (std::size_t n = 0; n + 1 < 4; ++n)
            EXPECT_TRUE(is_zero(hom_compose(c->differential(n + 1), c->differential(n)))) << g.family << " / " << s.family;
    }
}

TEST(CochainComplex, LayoutFollowsChainEnumeration)
{
    Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        auto g = random_category(rng, 6);
        auto s = random_system(rng, build_factorization(g.category));
        auto c = build_complex(s.system, 3);
        for (std::size_t n = 0; n <= 3; ++n) {
            auto seqs = enumerate_sequences(*g.category, n);
            ASSERT_EQ(c->sequence_count(n), seqs.size());
            std::size_t gens = 0;
            for (std::size_t k = 0; k < seqs.size(); ++k) {
                EXPECT_EQ(c->sequence(n, k), seqs[k]);
                if (n) EXPECT_EQ(c->index_of(n, seqs[k].arrows.data()), k);
                const MorId comp = sequence_composite(*g.category, seqs[k]);
                EXPECT_EQ(c->composite(n, k), comp);
                EXPECT_EQ(c->gen_offset(n, k), gens);
                gens += s.system->value(comp)->generators();
            }
            EXPECT_EQ(c->group(n)->generators(), gens);
        }
    }
}

TEST(CochainComplex, CyclicGroupsAgainstBarResolution)
{
    // Degree 5 only for the smallest groups: F^N has n^N chains.
    for (unsigned n = 2; n <= 6; ++n) {
        const std::size_t top = n <= 3 ? 5 : 4;
        auto c = make_category(cyclic_group_category(n));
        auto bar = oracle::normalized_bar_complex(n, top);
        auto hz = cohomology_all(*build_complex(constant(c, 0), top));
        for (std::size_t k = 0; k < top; ++k) EXPECT_EQ(hz[k], oracle::integer_cohomology(bar, k)) << "Z/" << n << " H" << k;
        for (unsigned p : {2u, 3u}) {
            auto hp = cohomology_all(*build_complex(constant(c, p), top));
            for (std::size_t k = 0; k < top; ++k)
                EXPECT_EQ(hp[k], elementary(p, oracle::mod_p_cohomology(bar, k, p))) << "Z/" << n << " mod " << p << " H" << k;
        }
    }
}

TEST(CochainComplex, KnownGroupCohomology)
{
    auto z2 = make_category(cyclic_group_category(2));
    auto h = cohomology_all(*build_complex(constant(z2, 0), 4));
    EXPECT_EQ(h[0].to_string(), "Z");
    EXPECT_EQ(h[1].to_string(), "0");
    EXPECT_EQ(h[2].to_string(), "Z/2");
    EXPECT_EQ(h[3].to_string(), "0");
    auto z3 = make_category(cyclic_group_category(3));
    auto h3 = cohomology_all(*build_complex(constant(z3, 3), 4));
    for (const auto& g : h3) EXPECT_EQ(g.to_string(), "Z/3");
}

TEST(CochainComplex, PseudoCircle)
{
    // a, b < c, d
    std::vector<bool> leq(16, false);
    for (std::size_t i = 0; i < 4; ++i) leq[i * 4 + i] = true;
    for (std::size_t lo : {0u, 1u})
        for (std::size_t hi : {2u, 3u}) leq[lo * 4 + hi] = true;
    auto s = make_category(poset_category(4, leq, {"a", "b", "c", "d"}));
    auto h = cohomology_all(*build_complex(constant(s, 0), 4));
    EXPECT_EQ(h[0].to_string(), "Z");
    EXPECT_EQ(h[1].to_string(), "Z");
    EXPECT_EQ(h[2].to_string(), "0");
    EXPECT_EQ(h[3].to_string(), "0");
    expect_nerve_oracle(s, 4, "pseudo-circle");
}

TEST(CochainComplex, RandomPosetsAgainstNerve)
{
    Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        auto p = make_category(random_poset(rng, rng.below(5) + 2, rng.below(50) + 20));
        expect_nerve_oracle(p, 3, "poset " + std::to_string(i));
    }
}

TEST(CochainComplex, RandomCategoriesAgainstNerve)
{
    Rng rng(44);
    for (int i = 0; i < 30; ++i) {
        auto g = random_category(rng, 6);
        expect_nerve_oracle(g.category, 3, g.family);
    }
}

TEST(CochainComplex, DegreeRange)
{
    auto c = build_complex(constant(make_category(terminal_category()), 0), 3);
    EXPECT_EQ(c->max_degree(), 3u);
    EXPECT_EQ(cohomology_all(*c).size(), 3u);
    EXPECT_THROW(cohomology(*c, 3), DegreeOutOfRange);
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(c->sequence_count(n), 1u);
    EXPECT_FALSE(c->describe_generator(2, 0).empty());
}

TEST(GradedMap, IdentityIsAChainMap)
{
    Rng rng(45);
    for (int i = 0; i < 20; ++i) {
        auto g = random_category(rng, 5);
        auto s = random_system(rng, build_factorization(g.category));
        auto c = build_complex(s.system, 3);
        auto one = graded_identity(c);
        check_chain_map(one);
        check_chain_map(graded_add(one, graded_negate(one)));
        check_homotopy(graded_zero(c, c, -1), one, one);
        EXPECT_THROW(check_homotopy(graded_zero(c, c, -1), one, graded_zero(c, c, 0)), IdentityViolation);
        auto sq = cohomology_subquotient(*c, 1);
        EXPECT_TRUE(homs_equal(induced_on_cohomology(one, 1, sq, sq), GroupHom::identity(make_group(sq.homology))));
    }
}
