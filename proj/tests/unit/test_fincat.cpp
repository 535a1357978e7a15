#include <gtest/gtest.h>

#include <numeric>

#include "bwcohom/errors.hpp"
#include "bwcohom/fincat.hpp"
#include "bwcohom/generators.hpp"
#include "oracles.hpp"

using namespace bwc;

namespace {

std::vector<FiniteCategory> zoo()
{
    std::vector<FiniteCategory> out{terminal_category(), arrow_category(), discrete_category(3),
                                    indiscrete_category(3), cyclic_group_category(4)};
    out.push_back(monoid_category(2, {0, 1, 1, 1}, 0, {"1", "e"}));
    out.push_back(product(arrow_category(), cyclic_group_category(2)));
    out.push_back(disjoint_union(arrow_category(), terminal_category()));
    Rng rng(3);
    for (int i = 0; i < 10; ++i) out.push_back(random_poset(rng, rng.below(5) + 1));
    return out;
}

// Components by union-find over morphism endpoints.
std::size_t component_count(const FiniteCategory& c)
{
    std::vector<std::size_t> parent(c.object_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t f = 0; f < c.morphism_count(); ++f) parent[find(c.source(f))] = find(c.target(f));
    std::size_t n = 0;
    for (std::size_t x = 0; x < c.object_count(); ++x) n += find(x) == x;
    return n;
}

FiniteCategory with_entry(const FiniteCategory& c, MorId g, MorId f, MorId value)
{
    std::vector<FiniteCategory::Morphism> mors;
    for (std::size_t m = 0; m < c.morphism_count(); ++m) mors.push_back({c.morphism_name(m), c.source(m), c.target(m)});
    std::vector<MorId> ids;
    for (std::size_t x = 0; x < c.object_count(); ++x) ids.push_back(c.identity(x));
    std::vector<MorId> table(c.morphism_count() * c.morphism_count());
    for (std::size_t a = 0; a < c.morphism_count(); ++a)
        for (std::size_t b = 0; b < c.morphism_count(); ++b) table[a * c.morphism_count() + b] = c.table(a, b);
    table[g * c.morphism_count() + f] = value;
    return FiniteCategory(c.object_names(), mors, ids, table);
}

} // namespace

TEST(FiniteCategory, BuiltinsAndGeneratedCategoriesValidate)
{
    for (const auto& c : zoo()) EXPECT_TRUE(validate_category(c).ok());
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        auto g = random_category(rng, 8);
        auto report = validate_category(*g.category);
        EXPECT_TRUE(report.ok()) << g.family << ": " << (report.ok() ? "" : report.violations.front());
    }
}

TEST(FiniteCategory, BrokenTablesAreReported)
{
    for (const auto& c : zoo()) {
        for (std::size_t f = 0; f < c.morphism_count(); ++f) {
            const MorId g = c.identity(c.target(f));
            // Dropping a composite.
            EXPECT_FALSE(validate_category(with_entry(c, g, f, kNone)).ok());
            // A composite with the wrong endpoints.
            for (std::size_t w = 0; w < c.morphism_count(); ++w)
                if (c.source(w) != c.source(f) || c.target(w) != c.target(f)) {
                    EXPECT_FALSE(validate_category(with_entry(c, g, f, w)).ok());
                    break;
                }
        }
    }
}

TEST(FiniteCategory, BrokenGroupTableFailsAssociativity)
{
    for (std::size_t n = 3; n <= 5; ++n) {
        auto c = cyclic_group_category(n);
        auto report = validate_category(with_entry(c, 1, 1, 0));
        ASSERT_FALSE(report.ok());
        bool assoc = false;
        for (const auto& v : report.violations) assoc = assoc || v.find("associativity") != std::string::npos;
        EXPECT_TRUE(assoc);
    }
}

TEST(FiniteCategory, NonComposablePairIsReportedAsTriple)
{
    auto a = arrow_category();
    auto broken = with_entry(a, 2, 2, 2);
    auto report = validate_category(broken);
    ASSERT_FALSE(report.ok());
    EXPECT_NE(report.violations.front().find("('f', 'f', 'f')"), std::string::npos) << report.violations.front();
}

TEST(FiniteCategory, ComposeChecksEndpoints)
{
    auto a = arrow_category();
    EXPECT_EQ(a.compose(1, 2), 2u);
    EXPECT_EQ(a.compose(2, 0), 2u);
    EXPECT_THROW(a.compose(2, 2), NotComposable);
    EXPECT_THROW(a.compose(0, 2), NotComposable);
}

TEST(FiniteCategory, ChainCountsMatchDynamicProgramming)
{
    Rng rng(5);
    for (int i = 0; i < 60; ++i) {
        auto g = random_category(rng, 7);
        for (std::size_t n = 0; n <= 4; ++n) {
            EXPECT_EQ(count_sequences(*g.category, n), oracle::count_chains(*g.category, n)) << g.family << " n=" << n;
            auto seqs = enumerate_sequences(*g.category, n);
            ASSERT_EQ(seqs.size(), count_sequences(*g.category, n));
            for (std::size_t k = 1; n && k < seqs.size(); ++k) EXPECT_LT(seqs[k - 1].arrows, seqs[k].arrows);
            for (const auto& s : seqs) {
                for (std::size_t j = 1; j < s.length(); ++j)
                    EXPECT_EQ(g.category->source(s.arrows[j - 1]), g.category->target(s.arrows[j]));
                if (n) EXPECT_EQ(s.head, g.category->target(s.arrows[0]));
            }
        }
    }
}

TEST(FiniteCategory, SequenceObjectsAndComposite)
{
    auto c = cyclic_group_category(5);
    MorphismSequence s{0, {2, 4}};
    EXPECT_EQ(sequence_composite(c, s), 1u);
    EXPECT_EQ(sequence_object(c, s, 2), 0u);
    auto a = arrow_category();
    EXPECT_EQ(sequence_composite(a, MorphismSequence{1, {}}), a.identity(1));
}

TEST(FiniteCategory, ComponentsMatchUnionFind)
{
    Rng rng(6);
    for (int i = 0; i < 60; ++i) {
        auto p = random_poset(rng, rng.below(6) + 1, 20);
        auto comps = pi0(p);
        EXPECT_EQ(comps.size(), component_count(p));
        std::size_t total = 0;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            total += comps[k].size();
            EXPECT_TRUE(std::is_sorted(comps[k].begin(), comps[k].end()));
            if (k) EXPECT_LT(comps[k - 1].front(), comps[k].front());
        }
        EXPECT_EQ(total, p.object_count());
    }
    EXPECT_EQ(pi0(discrete_category(4)).size(), 4u);
    EXPECT_EQ(pi0(disjoint_union(arrow_category(), cyclic_group_category(3))).size(), 2u);
}

TEST(FiniteCategory, OppositeAndProduct)
{
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        auto c = *random_category(rng, 6).category;
        auto op = opposite(c);
        EXPECT_TRUE(validate_category(op).ok());
        EXPECT_EQ(opposite(op), c);
        for (std::size_t f = 0; f < c.morphism_count(); ++f) {
            EXPECT_EQ(op.source(f), c.target(f));
            for (std::size_t g = 0; g < c.morphism_count(); ++g) EXPECT_EQ(op.table(f, g), c.table(g, f));
        }
        auto d = *random_category(rng, 4).category;
        auto p = product(c, d);
        EXPECT_TRUE(validate_category(p).ok());
        EXPECT_EQ(p.object_count(), c.object_count() * d.object_count());
        EXPECT_EQ(p.morphism_count(), c.morphism_count() * d.morphism_count());
        for (std::size_t n = 0; n <= 2; ++n)
            EXPECT_EQ(count_sequences(p, n), count_sequences(c, n) * count_sequences(d, n));
    }
}

TEST(FiniteCategory, IsomorphismsAndInverses)
{
    auto z4 = cyclic_group_category(4);
    for (MorId f = 0; f < 4; ++f) EXPECT_EQ(z4.compose(z4.inverse(f), f), 0u);
    auto a = arrow_category();
    EXPECT_FALSE(a.is_iso(2));
    auto ind = indiscrete_category(3);
    for (MorId f = 0; f < ind.morphism_count(); ++f) EXPECT_TRUE(ind.is_iso(f));
}

TEST(Functor, EnumerationCounts)
{
    auto arrow = make_category(arrow_category());
    EXPECT_EQ(enumerate_functors(arrow, arrow).size(), 3u);
    auto z2 = make_category(cyclic_group_category(2));
    auto z4 = make_category(cyclic_group_category(4));
    auto z6 = make_category(cyclic_group_category(6));
    auto z3 = make_category(cyclic_group_category(3));
    EXPECT_EQ(enumerate_functors(z2, z4).size(), 2u);
    EXPECT_EQ(enumerate_functors(z3, z6).size(), 3u);
    EXPECT_EQ(enumerate_functors(z4, z2).size(), 2u);
    for (const auto& f : enumerate_functors(z3, z6)) EXPECT_TRUE(validate_functor(f).ok());
}

TEST(Functor, BrokenFunctorsAreReported)
{
    auto arrow = make_category(arrow_category());
    auto z2 = make_category(cyclic_group_category(2));
    EXPECT_FALSE(validate_functor(Functor(arrow, arrow, {0, 0}, {0, 1, 2})).ok());
    EXPECT_FALSE(validate_functor(Functor(z2, z2, {0}, {1, 1})).ok());
    EXPECT_TRUE(validate_functor(Functor(z2, z2, {0}, {0, 1})).ok());
}

TEST(NaturalTransformation, CompositionAndWhiskering)
{
    auto arrow = make_category(arrow_category());
    auto id = Functor::identity(arrow);
    auto to_y = Functor::constant(arrow, arrow, 1);
    auto to_x = Functor::constant(arrow, arrow, 0);
    NaturalTransformation unit(id, to_y, {2, 1});
    NaturalTransformation counit(to_x, id, {0, 2});
    EXPECT_TRUE(validate_natural_transformation(unit).ok());
    EXPECT_TRUE(validate_natural_transformation(counit).ok());
    EXPECT_FALSE(validate_natural_transformation(NaturalTransformation(id, to_y, {2, 2})).ok());

    auto through = vertical_compose(unit, counit);
    EXPECT_EQ(through.components(), (std::vector<MorId>{2, 2}));
    EXPECT_THROW(vertical_compose(counit, counit), ShapeMismatch);

    auto hc = horizontal_compose(unit, unit);
    EXPECT_TRUE(validate_natural_transformation(hc).ok());
    EXPECT_EQ(hc.source(), compose(id, id));
    EXPECT_EQ(hc.target(), compose(to_y, to_y));
    EXPECT_EQ(whisker_left(to_y, unit).components(), (std::vector<MorId>{1, 1}));
    EXPECT_EQ(whisker_right(unit, to_x).components(), (std::vector<MorId>{2, 2}));

    auto all = enumerate_natural_transformations(id, to_y);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all.front(), unit);
}

TEST(NaturalTransformation, RandomEnumerationIsNatural)
{
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
        auto c = random_small_category(rng);
        auto d = random_category(rng, 5).category;
        auto functors = enumerate_functors(c, d, 20);
        if (functors.size() < 2) continue;
        const auto& phi = rng.pick(functors);
        const auto& psi = rng.pick(functors);
        for (const auto& a : enumerate_natural_transformations(phi, psi, 20)) {
            EXPECT_TRUE(validate_natural_transformation(a).ok());
            EXPECT_EQ(vertical_compose(NaturalTransformation::identity(psi), a), a);
        }
    }
}

TEST(FiniteCategory, TriplesFillIdentities)
{
    std::vector<FiniteCategory::Morphism> mors{{"1_x", 0, 0}, {"1_y", 1, 1}, {"f", 0, 1}};
    auto c = FiniteCategory::from_triples({"x", "y"}, mors, {0, 1}, {});
    EXPECT_TRUE(validate_category(c).ok());
    EXPECT_EQ(c, arrow_category());
}
