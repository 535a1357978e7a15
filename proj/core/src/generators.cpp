#include "bwcohom/generators.hpp"

#include <limits>

namespace bwc {

std::size_t Rng::below(std::size_t n)
{
    const std::uint64_t range = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return static_cast<std::size_t>(x % range);
}

long Rng::between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }

FiniteCategory random_poset(Rng& rng, std::size_t n, std::size_t percent)
{
    std::vector<bool> leq(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        leq[i * n + i] = true;
        for (std::size_t j = i + 1; j < n; ++j) leq[i * n + j] = rng.chance(percent, 100);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i * n + k] && leq[k * n + j]) leq[i * n + j] = true;
    return poset_category(n, leq);
}

namespace {

FiniteCategory idempotent_monoid() { return monoid_category(2, {0, 1, 1, 1}, 0, {"1", "e"}); }

// {1, a, b} with a and b left zeros: a·x = a, b·x = b.
FiniteCategory left_zero_monoid() { return monoid_category(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0, {"1", "a", "b"}); }

FiniteCategory build_family(Rng& rng, std::size_t family)
{
    switch (family) {
    case 0: return random_poset(rng, static_cast<std::size_t>(rng.between(2, 4)));
    case 1: return cyclic_group_category(static_cast<std::size_t>(rng.between(2, 5)));
    case 2: return idempotent_monoid();
    case 3: return left_zero_monoid();
    case 4: return arrow_category();
    case 5: return indiscrete_category(2);
    case 6: return discrete_category(2);
    case 7: return product(arrow_category(), cyclic_group_category(2));
    case 8: return disjoint_union(arrow_category(), cyclic_group_category(2));
    default: return terminal_category();
    }
}

const char* family_name(std::size_t family)
{
    static const char* names[] = {"poset",        "cyclic group", "idempotent monoid",  "left-zero monoid", "arrow",
                                  "indiscrete 2", "discrete 2",   "arrow x Z/2", "arrow + Z/2",     "terminal"};
    return names[family];
}

} // namespace

GeneratedCategory random_category(Rng& rng, std::size_t max_morphisms)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        const std::size_t family = rng.below(10);
        FiniteCategory c = build_family(rng, family);
        if (c.morphism_count() <= max_morphisms) return {make_category(std::move(c)), family_name(family)};
    }
    return {make_category(terminal_category()), "terminal"};
}

CatPtr random_small_category(Rng& rng)
{
    switch (rng.below(6)) {
    case 0: return make_category(terminal_category());
    case 1: return make_category(arrow_category());
    case 2: return make_category(cyclic_group_category(2));
    case 3: return make_category(cyclic_group_category(3));
    case 4: return make_category(discrete_category(2));
    default: return make_category(idempotent_monoid());
    }
}

namespace {

Integer pick_modulus(Rng& rng, std::initializer_list<long> choices)
{
    std::vector<long> v(choices);
    return Integer(rng.pick(v));
}

NaturalSystem random_character(Rng& rng, const FactorizationPtr& fc, const Integer& modulus)
{
    const CatPtr& c = fc->base();
    auto chars = enumerate_functors(c, make_category(cyclic_group_category(2)), 64);
    const Functor& l = rng.pick(chars);
    const Functor& r = rng.pick(chars);
    std::vector<int> left(c->morphism_count()), right(c->morphism_count());
    for (MorId f = 0; f < left.size(); ++f) {
        left[f] = l.on_morphism(f) == 0 ? 1 : -1;
        right[f] = r.on_morphism(f) == 0 ? 1 : -1;
    }
    return character_system(fc, left, right, modulus);
}

} // namespace

GeneratedSystem random_system(Rng& rng, const FactorizationPtr& fc)
{
    const CatPtr& c = fc->base();
    switch (rng.below(8)) {
    case 0: return {make_system(constant_system(fc, make_group(PresentedGroup::free(1)))), "constant Z"};
    case 1: {
        const Integer k = pick_modulus(rng, {2, 3, 4});
        return {make_system(constant_system(fc, make_group(PresentedGroup::cyclic(k)))), "constant Z/" + k.get_str()};
    }
    case 2:
        return {make_system(constant_system(fc, make_group(PresentedGroup::from_invariants({1, {Integer(2)}})))),
                "constant Z+Z/2"};
    case 3: {
        const MorId f0 = rng.below(c->morphism_count());
        return {make_system(representable_system(fc, f0, pick_modulus(rng, {0, 2}))), "representable"};
    }
    case 4: return {make_system(from_bifunctor(fc, hom_bifunctor(c, pick_modulus(rng, {0, 2, 3})))), "hom"};
    case 5: return {make_system(random_character(rng, fc, pick_modulus(rng, {0, 3, 4}))), "character"};
    case 6:
        return {make_system(reduce_mod(from_bifunctor(fc, hom_bifunctor(c)), pick_modulus(rng, {2, 3}))), "hom mod k"};
    default:
        return {make_system(direct_sum(constant_system(fc, make_group(PresentedGroup::cyclic(2))),
                                       random_character(rng, fc, 0))),
                "Z/2 + character"};
    }
}

namespace {

struct Step {
    Functor functor;
    NaturalTransformation nat;
};

// A functor g with a transformation g => anchor (into) or anchor => g, preferring nonidentities.
Step pick_step(Rng& rng, const std::vector<Functor>& all, const Functor& anchor, bool into)
{
    std::vector<Step> found;
    for (int tries = 0; tries < 4; ++tries) {
        const Functor& g = rng.pick(all);
        auto nats = into ? enumerate_natural_transformations(g, anchor, 8) : enumerate_natural_transformations(anchor, g, 8);
        if (nats.empty()) continue;
        const NaturalTransformation& t = rng.pick(nats);
        if (!(t == NaturalTransformation::identity(anchor))) found.push_back({g, t});
    }
    if (found.empty() || rng.chance(1, 8)) return {anchor, NaturalTransformation::identity(anchor)};
    return rng.pick(found);
}

// E and s: D F(beta) => E over the identity of the small category.
std::pair<SystemPtr, std::vector<GroupHom>> random_target(Rng& rng, const SystemPtr& d, const NaturalTransformation& beta,
                                                          const FactorizationPtr& fd)
{
    SystemPtr pulled = make_system(pullback_along_nat(*d, beta, fd));
    std::vector<GroupHom> s;
    switch (rng.below(3)) {
    case 0:
        for (const auto& g : pulled->values()) s.push_back(GroupHom::identity(g));
        return {pulled, std::move(s)};
    case 1: {
        const Integer m = pick_modulus(rng, {-1, 2, 3});
        for (const auto& g : pulled->values()) s.push_back(GroupHom::scalar(g, m));
        return {pulled, std::move(s)};
    }
    default: {
        SystemPtr reduced = make_system(reduce_mod(*pulled, pick_modulus(rng, {2, 3})));
        return {reduced, reduction_map(pulled, reduced).components()};
    }
    }
}

// t = s D(epsilon, gamma) for a cell ending at the 1-morphism (beta, s).
NatSysMorphism pull_back_through(const SystemPtr& d, const TwoCell& cell, const NatSysMorphism& to,
                                 const FactorizationPtr& fd)
{
    NaturalTransformation fcell = factor_two_morphism(cell, *fd, *d->factorization());
    std::vector<GroupHom> comps(fd->base()->morphism_count());
    for (MorId sigma = 0; sigma < comps.size(); ++sigma)
        comps[sigma] = hom_compose(to.component(sigma), d->action(fcell[sigma]));
    return NatSysMorphism(cell.alpha, d, to.target(), std::move(comps));
}

} // namespace

std::optional<NatTwoCell> random_nat_cell(Rng& rng, const SystemPtr& d, const CatPtr& small)
{
    auto all = enumerate_functors(small, d->base(), 256);
    if (all.empty()) return std::nullopt;
    const FactorizationPtr fd = build_factorization(small);
    const Functor phi = rng.pick(all);
    Step eps = pick_step(rng, all, phi, true);
    Step alpha = pick_step(rng, all, phi, false);
    Step gamma = pick_step(rng, all, alpha.functor, false);
    NaturalTransformation beta = vertical_compose(gamma.nat, vertical_compose(alpha.nat, eps.nat));
    TwoCell cell{alpha.nat, beta, eps.nat, gamma.nat};
    auto [e, s] = random_target(rng, d, beta, fd);
    NatSysMorphism to(beta, d, e, std::move(s));
    NatSysMorphism from = pull_back_through(d, cell, to, fd);
    return NatTwoCell{std::move(cell), std::move(from), std::move(to)};
}

std::optional<std::pair<NatTwoCell, NatTwoCell>> random_ladder(Rng& rng, const SystemPtr& d, const CatPtr& small)
{
    auto all = enumerate_functors(small, d->base(), 256);
    if (all.empty()) return std::nullopt;
    const FactorizationPtr fd = build_factorization(small);
    const Functor phi = rng.pick(all);
    Step eps = pick_step(rng, all, phi, true);            // phi' => phi
    Step eps1 = pick_step(rng, all, eps.functor, true);   // xi => phi'
    Step alpha = pick_step(rng, all, phi, false);         // phi => psi
    Step gamma = pick_step(rng, all, alpha.functor, false); // psi => psi'
    Step gamma1 = pick_step(rng, all, gamma.functor, false); // psi' => zeta
    NaturalTransformation alpha1 = vertical_compose(gamma.nat, vertical_compose(alpha.nat, eps.nat));
    NaturalTransformation beta = vertical_compose(gamma1.nat, vertical_compose(alpha1, eps1.nat));
    TwoCell first{alpha.nat, alpha1, eps.nat, gamma.nat};
    TwoCell second{alpha1, beta, eps1.nat, gamma1.nat};
    auto [e, s] = random_target(rng, d, beta, fd);
    NatSysMorphism to(beta, d, e, std::move(s));
    NatSysMorphism mid = pull_back_through(d, second, to, fd);
    NatSysMorphism from = pull_back_through(d, first, mid, fd);
    return std::make_pair(NatTwoCell{std::move(first), from, mid}, NatTwoCell{std::move(second), mid, to});
}

namespace {

// A random subset with a least upper member for every point, or nullopt.
std::optional<std::vector<ObjId>> random_reflector(Rng& rng, const FiniteCategory& c)
{
    const std::size_t n = c.object_count();
    std::vector<bool> member(n);
    for (ObjId x = 0; x < n; ++x) member[x] = rng.chance(1, 2);
    std::vector<ObjId> r(n, kNone);
    for (ObjId x = 0; x < n; ++x) {
        for (ObjId s = 0; s < n; ++s) {
            if (!member[s] || c.hom(x, s).empty()) continue;
            bool least = true;
            for (ObjId t = 0; t < n && least; ++t)
                if (member[t] && !c.hom(x, t).empty() && c.hom(s, t).empty()) least = false;
            if (least) r[x] = s;
        }
        if (r[x] == kNone) return std::nullopt;
    }
    return r;
}

} // namespace

GeneratedLocalization random_localization(Rng& rng, std::size_t max_morphisms)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        const bool with_group = rng.chance(1, 4);
        const std::size_t budget = with_group ? max_morphisms / 2 : max_morphisms;
        Localization l;
        std::string family;
        if (rng.chance(1, 6)) {
            l = arrow_localization();
            family = "arrow";
        } else {
            CatPtr p = make_category(random_poset(rng, static_cast<std::size_t>(rng.between(2, 4))));
            auto r = random_reflector(rng, *p);
            if (!r) continue;
            l = poset_reflection(p, *r);
            family = "poset reflection";
        }
        if (l.big->morphism_count() > budget) continue;
        if (with_group) {
            l = product_localization(l, make_category(cyclic_group_category(2)));
            family += " x Z/2";
        }
        return {std::move(l), family};
    }
    return {arrow_localization(), "arrow"};
}

} // namespace bwc
