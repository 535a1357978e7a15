#include <gtest/gtest.h>

#include "bwcohom/abelian.hpp"
#include "bwcohom/errors.hpp"
#include "oracles.hpp"
#include "random_input.hpp"

using namespace bwc;

namespace {

IntMatrix draw(Rng& rng)
{
    const std::size_t r = rng.below(6) + 1, c = rng.below(6) + 1;
    return rng.chance(1, 2) ? oracle::random_matrix(rng, r, c) : oracle::sparse_matrix(rng, r, c);
}

bool unimodular(const IntMatrix& u)
{
    const Integer d = oracle::cofactor_determinant(u);
    return d == 1 || d == -1;
}

GroupPtr group(std::size_t gens, IntMatrix rel) { return make_group(PresentedGroup(gens, std::move(rel))); }

} // namespace

TEST(Determinant, AgreesWithCofactorExpansion)
{
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = rng.below(6) + 1;
        IntMatrix m = oracle::random_matrix(rng, n, n);
        EXPECT_EQ(determinant(m), oracle::cofactor_determinant(m)) << m;
    }
}

TEST(Smith, DiagonalMatchesDeterminantalDivisors)
{
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        IntMatrix m = draw(rng);
        EXPECT_EQ(smith_diagonal(m), oracle::determinantal_invariants(m)) << m;
    }
}

TEST(Smith, DiagonalMatchesEuclidElimination)
{
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        IntMatrix m = draw(rng);
        EXPECT_EQ(smith_diagonal(m), oracle::naive_elementary_divisors(m)) << m;
    }
}

TEST(Smith, TransformsAreUnimodularAndReproduceS)
{
    Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = draw(rng);
        SmithForm f = smith_normal_form(m);
        EXPECT_EQ(f.U * m * f.V, f.S) << m;
        EXPECT_TRUE(unimodular(f.U));
        EXPECT_TRUE(unimodular(f.V));
        for (std::size_t a = 0; a < f.S.rows(); ++a)
            for (std::size_t b = 0; b < f.S.cols(); ++b)
                if (a != b) EXPECT_EQ(f.S(a, b), 0);
        const auto diag = smith_diagonal(m);
        for (std::size_t k = 1; k < diag.size(); ++k) EXPECT_EQ(diag[k] % diag[k - 1], 0);
    }
}

TEST(Hermite, ShapeTransformAndRank)
{
    Rng rng(15);
    for (int i = 0; i < 300; ++i) {
        IntMatrix m = draw(rng);
        HermiteForm h = hermite_normal_form(m);
        EXPECT_EQ(m * h.U, h.H) << m;
        EXPECT_TRUE(unimodular(h.U));
        EXPECT_EQ(h.rank, oracle::rational_rank(m));
        ASSERT_EQ(h.pivot_rows.size(), h.rank);
        for (std::size_t c = 0; c < h.rank; ++c) {
            const std::size_t p = h.pivot_rows[c];
            if (c) EXPECT_GT(p, h.pivot_rows[c - 1]);
            EXPECT_GT(h.H(p, c), 0);
            for (std::size_t r = 0; r < p; ++r) EXPECT_EQ(h.H(r, c), 0);
            for (std::size_t left = 0; left < c; ++left) {
                EXPECT_GE(h.H(p, left), 0);
                EXPECT_LT(h.H(p, left), h.H(p, c));
            }
        }
        for (std::size_t c = h.rank; c < h.H.cols(); ++c)
            for (std::size_t r = 0; r < h.H.rows(); ++r) EXPECT_EQ(h.H(r, c), 0);
    }
}

TEST(Hermite, KernelBasis)
{
    Rng rng(16);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = draw(rng);
        IntMatrix k = integer_kernel(m);
        EXPECT_TRUE((m * k).is_zero());
        EXPECT_EQ(k.cols(), m.cols() - oracle::rational_rank(m));
        EXPECT_EQ(oracle::rational_rank(k), k.cols());
    }
}

TEST(Hermite, SolveIntegerFindsPlantedSolutions)
{
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        IntMatrix a = draw(rng);
        IntMatrix x = oracle::random_matrix(rng, a.cols(), 2, -3, 3);
        IntMatrix b = a * x;
        auto sol = solve_integer(a, b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(a * *sol, b);
    }
}

TEST(Hermite, SolveIntegerRejectsNonIntegralSystems)
{
    IntMatrix a{{2, 0}, {0, 4}};
    IntMatrix b{{1}, {0}};
    EXPECT_FALSE(solve_integer(a, b).has_value());
    IntMatrix b2{{2}, {8}};
    EXPECT_TRUE(solve_integer(a, b2).has_value());
}

TEST(Invariants, HomCountsToCyclicGroups)
{
    Rng rng(18);
    for (int i = 0; i < 150; ++i) {
        const std::size_t gens = rng.below(4) + 1, rels = rng.below(4);
        IntMatrix r = oracle::sparse_matrix(rng, gens, rels);
        GroupInvariants inv = group_invariants(PresentedGroup(gens, r));
        for (unsigned k : {2u, 3u, 4u, 6u})
            EXPECT_EQ(oracle::count_homs_to_cyclic(r, k), oracle::predicted_hom_count(inv, k))
                << r << " k=" << k << " " << inv.to_string();
    }
}

TEST(Invariants, Printing)
{
    GroupInvariants g;
    EXPECT_EQ(g.to_string(), "0");
    g.free_rank = 2;
    g.torsion = {2, 4};
    EXPECT_EQ(g.to_string(), "Z^2 ⊕ Z/2 ⊕ Z/4");
    EXPECT_EQ(g.compact(), "Z^2⊕Z/2⊕Z/4");
    EXPECT_EQ(group_invariants(PresentedGroup::cyclic(0)).to_string(), "Z");
    EXPECT_EQ(group_invariants(PresentedGroup::cyclic(1)).to_string(), "0");
    EXPECT_EQ(group_invariants(PresentedGroup(2, IntMatrix{{2, 0}, {0, 3}})).to_string(), "Z/6");
}

TEST(GroupHom, WellDefinednessIsChecked)
{
    auto z2 = make_group(PresentedGroup::cyclic(2));
    auto z3 = make_group(PresentedGroup::cyclic(3));
    auto z4 = make_group(PresentedGroup::cyclic(4));
    EXPECT_THROW(GroupHom::make(z2, z3, IntMatrix{{1}}), NotWellDefined);
    EXPECT_NO_THROW(GroupHom::make(z2, z4, IntMatrix{{2}}));
    EXPECT_THROW(GroupHom(z2, z4, IntMatrix{{2}}, IntMatrix{{2}}), NotWellDefined);
    EXPECT_NO_THROW(GroupHom(z2, z4, IntMatrix{{2}}, IntMatrix{{1}}));
}

TEST(GroupHom, EqualityModuloRelations)
{
    auto z6 = make_group(PresentedGroup::cyclic(6));
    EXPECT_TRUE(homs_equal(GroupHom::make(z6, z6, IntMatrix{{7}}), GroupHom::identity(z6)));
    EXPECT_FALSE(homs_equal(GroupHom::make(z6, z6, IntMatrix{{5}}), GroupHom::identity(z6)));
    EXPECT_TRUE(is_zero(GroupHom::make(z6, z6, IntMatrix{{-12}})));
}

TEST(GroupHom, IsomorphismsAndInverses)
{
    auto z6 = make_group(PresentedGroup::cyclic(6));
    auto five = GroupHom::make(z6, z6, IntMatrix{{5}});
    EXPECT_TRUE(is_iso(five));
    EXPECT_TRUE(homs_equal(hom_compose(hom_inverse(five), five), GroupHom::identity(z6)));
    auto two = GroupHom::make(z6, z6, IntMatrix{{2}});
    EXPECT_FALSE(is_iso(two));
    EXPECT_THROW(hom_inverse(two), NotInvertible);

    // Z/2 + Z/3 and Z/6 with a non-diagonal presentation.
    auto split = group(2, IntMatrix{{2, 0}, {0, 3}});
    auto z6b = make_group(PresentedGroup::cyclic(6));
    auto to = GroupHom::make(split, z6b, IntMatrix{{3, 2}});
    EXPECT_TRUE(is_iso(to));
    auto back = hom_inverse(to);
    EXPECT_TRUE(homs_equal(hom_compose(to, back), GroupHom::identity(z6b)));
    EXPECT_TRUE(homs_equal(hom_compose(back, to), GroupHom::identity(split)));
}

TEST(GroupHom, UnimodularMatricesInvert)
{
    Rng rng(19);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 60; ++i) {
        const std::size_t n = rng.below(3) + 1;
        IntMatrix u = oracle::random_matrix(rng, n, n, -3, 3);
        const Integer det = oracle::cofactor_determinant(u);
        if (det != 1 && det != -1) continue;
        ++checked;
        auto free = make_group(PresentedGroup::free(n));
        auto h = GroupHom::make(free, free, u);
        EXPECT_TRUE(is_iso(h));
        EXPECT_TRUE(homs_equal(hom_compose(hom_inverse(h), h), GroupHom::identity(free)));
    }
    EXPECT_GE(checked, 20);
}

TEST(Subquotient, ExactSequenceHomology)
{
    auto z = make_group(PresentedGroup::free(1));
    auto zero = make_group(PresentedGroup::free(0));
    auto two = GroupHom::make(z, z, IntMatrix{{2}});
    EXPECT_EQ(subquotient_invariants(two, GroupHom::zero(z, zero)).to_string(), "Z/2");
    EXPECT_EQ(subquotient_invariants(GroupHom::zero(zero, z), two).to_string(), "0");
    EXPECT_THROW(subquotient(two, GroupHom::identity(z)), CompositionNotZero);
}

TEST(Subquotient, MatchesOracleOnRandomComplexes)
{
    // A --d1--> B --d2--> C with d2 d1 = 0 built as d1 = K X for K a kernel basis of d2.
    Rng rng(20);
    for (int i = 0; i < 100; ++i) {
        IntMatrix d2 = oracle::sparse_matrix(rng, rng.below(4) + 1, rng.below(5) + 1);
        IntMatrix k = integer_kernel(d2);
        IntMatrix d1 = k * oracle::random_matrix(rng, k.cols(), rng.below(4) + 1, -3, 3);
        oracle::FreeComplex fc{{d1.cols(), d2.cols(), d2.rows()}, {d1, d2}};
        auto a = make_group(PresentedGroup::free(d1.cols()));
        auto b = make_group(PresentedGroup::free(d2.cols()));
        auto c = make_group(PresentedGroup::free(d2.rows()));
        EXPECT_EQ(subquotient_invariants(GroupHom::make(a, b, d1), GroupHom::make(b, c, d2)),
                  oracle::integer_cohomology(fc, 1));
    }
}
