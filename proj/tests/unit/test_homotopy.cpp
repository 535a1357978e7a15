#include <gtest/gtest.h>

#include "bwcohom/errors.hpp"
#include "bwcohom/generators.hpp"
#include "bwcohom/homotopy.hpp"

using namespace bwc;

namespace {

constexpr std::size_t kDegree = 3;

struct Base {
    SystemPtr system;
    ComplexPtr complex;
    std::string label;
};

Base draw(Rng& rng)
{
    auto g = random_category(rng, 5);
    auto s = random_system(rng, build_factorization(g.category));
    return {s.system, build_complex(s.system, kDegree), g.family + " / " + s.family};
}

bool throws_identity(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const IdentityViolation&) {
        return true;
    }
    return false;
}

} // namespace

TEST(Homotopy, CellsGiveHomotopies)
{
    Rng rng(51);
    int tested = 0, nontrivial = 0;
    for (int i = 0; i < 60; ++i) {
        auto b = draw(rng);
        auto cell = random_nat_cell(rng, b.system, random_small_category(rng));
        if (!cell) continue;
        ++tested;
        check_nat_two_cell(*cell);
        auto target = build_complex(cell->from.target(), kDegree);
        auto h = homotopy_h(*cell, b.complex, target, true);
        auto p = induced_map_2(cell->from, b.complex, target);
        auto q = induced_map_2(cell->to, b.complex, target);
        check_homotopy(h, p, q);
        // Doubling h breaks the identity exactly when q - p is not zero.
        const bool differ = throws_identity([&] { check_homotopy(graded_zero(b.complex, target, -1), p, q); });
        EXPECT_EQ(throws_identity([&] { check_homotopy(graded_add(h, h), p, q); }), differ) << b.label;
        nontrivial += differ;
    }
    EXPECT_GE(tested, 50);
    EXPECT_GE(nontrivial, 10);
}

TEST(Homotopy, StackedCellsGiveSecondHomotopies)
{
    Rng rng(52);
    int tested = 0, nontrivial = 0;
    for (int i = 0; i < 40; ++i) {
        auto b = draw(rng);
        auto ladder = random_ladder(rng, b.system, random_small_category(rng));
        if (!ladder) continue;
        ++tested;
        auto target = build_complex(ladder->first.from.target(), kDegree);
        auto r = homotopy_r_vertical(ladder->second, ladder->first, b.complex, target, true);
        auto composite = vertical_nat_cells(ladder->second, ladder->first);
        auto rhs = graded_sub(homotopy_h(composite, b.complex, target),
                              graded_add(homotopy_h(ladder->first, b.complex, target),
                                         homotopy_h(ladder->second, b.complex, target)));
        check_second_homotopy(r, rhs);
        const bool nonzero = throws_identity([&] { check_second_homotopy(graded_zero(b.complex, target, -2), rhs); });
        EXPECT_EQ(throws_identity([&] { check_second_homotopy(graded_add(r, r), rhs); }), nonzero) << b.label;
        nontrivial += nonzero;
    }
    EXPECT_GE(tested, 30);
    EXPECT_GE(nontrivial, 3);
}

TEST(Homotopy, SideBySideCellsGiveSecondHomotopies)
{
    Rng rng(53);
    int tested = 0;
    for (int i = 0; i < 40; ++i) {
        auto b = draw(rng);
        auto outer = random_nat_cell(rng, b.system, random_small_category(rng));
        if (!outer) continue;
        auto inner = random_nat_cell(rng, outer->from.target(), random_small_category(rng));
        if (!inner) continue;
        ++tested;
        auto mid = build_complex(outer->from.target(), kDegree);
        auto last = build_complex(inner->from.target(), kDegree);
        auto r = homotopy_r_horizontal(*outer, *inner, b.complex, mid, last, true);
        auto rhs = graded_sub(homotopy_h(horizontal_nat_cells(*outer, *inner), b.complex, last),
                              graded_add(graded_compose(homotopy_h(*inner, mid, last),
                                                        induced_map_2(outer->from, b.complex, mid)),
                                         graded_compose(induced_map_2(inner->to, mid, last),
                                                        homotopy_h(*outer, b.complex, mid))));
        check_second_homotopy(r, rhs);
    }
    EXPECT_GE(tested, 30);
}

TEST(Homotopy, InvalidCellsAreRejected)
{
    Rng rng(54);
    int rejected = 0;
    for (int i = 0; i < 60 && rejected < 5; ++i) {
        auto b = draw(rng);
        auto ladder = random_ladder(rng, b.system, random_small_category(rng));
        if (!ladder) continue;
        // Swapping the ends of a cell is only valid when both ends agree.
        NatTwoCell swapped{ladder->first.cell, ladder->first.to, ladder->first.from};
        if (validate_nat_two_cell(swapped).ok()) continue;
        ++rejected;
        EXPECT_THROW(check_nat_two_cell(swapped), TwoMorphismInvalid);
        EXPECT_THROW(homotopy_h(swapped, b.complex, build_complex(swapped.from.target(), kDegree)), TwoMorphismInvalid);
    }
    EXPECT_GE(rejected, 1);

    auto c = make_category(arrow_category());
    auto d = make_system(constant_system(build_factorization(c), make_group(PresentedGroup::free(1))));
    auto one = identity_nat_cell(NatSysMorphism::identity(d));
    auto other = make_system(constant_system(build_factorization(c), make_group(PresentedGroup::cyclic(2))));
    auto two = identity_nat_cell(NatSysMorphism::identity(other));
    EXPECT_THROW(vertical_nat_cells(two, one), LadderInvalid);
}

TEST(Homotopy, IdentityCellIsRelativelyNull)
{
    // h of an identity cell inserts identities, so it is not zero on degenerate
    // chains; it is a homotopy 1 => 1 relatively homotopic to 0.
    Rng rng(55);
    int decided = 0;
    for (int i = 0; i < 20; ++i) {
        auto b = draw(rng);
        auto h = homotopy_h(identity_nat_cell(NatSysMorphism::identity(b.system)), b.complex, b.complex);
        auto one = graded_identity(b.complex);
        check_homotopy(h, one, one);
        try {
            EXPECT_TRUE(homotopy_class_equal(graded_zero(b.complex, b.complex, -1), h).equal) << b.label;
            ++decided;
        } catch (const DimensionMismatch&) {
        }
    }
    EXPECT_GE(decided, 10);
}

TEST(Homotopy, RelativeClasses)
{
    // Z/2 with Z/2 coefficients: d^0 = 0 and every value of d^1 c is c(1), so
    // evaluation at the chain (g) is a homotopy 0 => 0 that is not relatively
    // null, while evaluation at (1) is.
    auto c = make_category(cyclic_group_category(2));
    auto d = make_system(constant_system(build_factorization(c), make_group(PresentedGroup::cyclic(2))));
    auto a = build_complex(d, 2);
    auto zero = graded_zero(a, a, -1);
    auto eval = [&](MorId m) {
        IntMatrix e(1, a->group(1)->generators());
        e(0, a->gen_offset(1, a->index_of(1, &m))) = 1;
        GradedMap z = zero;
        z.set(1, GroupHom::make(a->group(1), a->group(0), e));
        return z;
    };
    auto at_g = eval(1);
    auto at_1 = eval(0);
    auto chain_zero = graded_zero(a, a, 0);
    check_homotopy(at_g, chain_zero, chain_zero);
    check_homotopy(at_1, chain_zero, chain_zero);

    EXPECT_TRUE(homotopy_class_equal(zero, zero).equal);
    auto v1 = homotopy_class_equal(zero, at_1);
    EXPECT_TRUE(v1.equal);
    check_second_homotopy(v1.witness, graded_sub(at_1, zero));
    EXPECT_FALSE(homotopy_class_equal(zero, at_g).equal);
    EXPECT_FALSE(homotopy_class_equal(at_1, at_g).equal);
    EXPECT_THROW(homotopy_class_equal(zero, at_g, 1), DimensionMismatch);
}

TEST(Homotopy, SumOfStackedHomotopiesIsRelativelyHomotopicToComposite)
{
    Rng rng(56);
    int decided = 0;
    for (int i = 0; i < 30; ++i) {
        auto b = draw(rng);
        auto ladder = random_ladder(rng, b.system, random_small_category(rng));
        if (!ladder) continue;
        auto target = build_complex(ladder->first.from.target(), kDegree);
        auto sum = graded_add(homotopy_h(ladder->first, b.complex, target),
                              homotopy_h(ladder->second, b.complex, target));
        auto composite = homotopy_h(vertical_nat_cells(ladder->second, ladder->first), b.complex, target);
        try {
            auto v = homotopy_class_equal(sum, composite);
            EXPECT_TRUE(v.equal) << b.label;
            ++decided;
        } catch (const DimensionMismatch&) {
        }
    }
    EXPECT_GE(decided, 15);
}
