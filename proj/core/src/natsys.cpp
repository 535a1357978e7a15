#include "bwcohom/natsys.hpp"

namespace bwc {

namespace {

std::string pair_name(const FactorizationCategory& fc, MorId p) { return "'" + fc.category()->morphism_name(p) + "'"; }

// Matrix of a permutation-like map between free groups on finite sets.
IntMatrix basis_map(std::size_t rows, const std::vector<std::size_t>& image)
{
    IntMatrix m(rows, image.size());
    for (std::size_t j = 0; j < image.size(); ++j) m(image[j], j) = 1;
    return m;
}

GroupPtr free_or_mod(std::size_t rank, const Integer& modulus)
{
    if (sgn(modulus) == 0) return make_group(PresentedGroup::free(rank));
    return make_group(PresentedGroup(rank, IntMatrix::scalar(rank, abs(modulus))));
}

// A hom between two groups of the form free_or_mod; the witness of a
// matrix M is M itself when both sides carry the relations m * I.
GroupHom basis_hom(const GroupPtr& src, const GroupPtr& tgt, IntMatrix m, const Integer& modulus)
{
    IntMatrix w = sgn(modulus) == 0 ? IntMatrix(tgt->relation_count(), src->relation_count()) : m;
    return GroupHom::assembled(src, tgt, std::move(m), std::move(w));
}

} // namespace

NaturalSystem::NaturalSystem(FactorizationPtr fc, std::vector<GroupPtr> values, std::vector<GroupHom> actions)
    : fc_(std::move(fc)), values_(std::move(values)), actions_(std::move(actions))
{
    if (values_.size() != fc_->base()->morphism_count())
        throw DimensionMismatch("NaturalSystem: one value per morphism of the base required");
    if (actions_.size() != fc_->pair_count())
        throw DimensionMismatch("NaturalSystem: one action per morphism of FC required");
    for (MorId p = 0; p < actions_.size(); ++p) {
        const FPair& q = fc_->pair(p);
        if (!same_group(actions_[p].source(), values_[q.source_object]) ||
            !same_group(actions_[p].target(), values_[q.target_object]))
            throw ShapeMismatch("NaturalSystem: action " + pair_name(*fc_, p) + " has the wrong source or target group");
    }
}

const GroupHom& NaturalSystem::action(MorId f, MorId h, MorId k) const
{
    const MorId p = fc_->find(f, h, k);
    if (p == kNone) throw ShapeMismatch("NaturalSystem::action: (h, k) is not a factorization out of f");
    return actions_[p];
}

SystemPtr make_system(NaturalSystem d) { return std::make_shared<const NaturalSystem>(std::move(d)); }

bool same_system(const SystemPtr& a, const SystemPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    if (!same_category(a->factorization()->category(), b->factorization()->category())) return false;
    for (MorId f = 0; f < a->values().size(); ++f)
        if (!same_group(a->value(f), b->value(f))) return false;
    for (MorId p = 0; p < a->actions().size(); ++p)
        if (a->action(p).matrix() != b->action(p).matrix() && !homs_equal(a->action(p), b->action(p))) return false;
    return true;
}

ValidationReport validate_natural_system(const NaturalSystem& d)
{
    ValidationReport r;
    const FactorizationCategory& fc = *d.factorization();
    const FiniteCategory& c = *fc.base();
    const FiniteCategory& cat = *fc.category();

    for (MorId p = 0; p < fc.pair_count(); ++p)
        if (!d.action(p).is_well_defined()) r.add("action " + pair_name(fc, p) + " is not well defined on the quotient");
    if (!r.ok()) return r;

    for (MorId f = 0; f < c.morphism_count(); ++f)
        if (!homs_equal(d.action(cat.identity(f)), GroupHom::identity(d.value(f))))
            r.add("action of the identity " + pair_name(fc, cat.identity(f)) + " is not the identity");

    for (MorId b = 0; b < fc.pair_count(); ++b)
        for (MorId a : cat.into(cat.source(b))) {
            const MorId ba = cat.table(b, a);
            if (!homs_equal(d.action(ba), hom_compose(d.action(b), d.action(a))))
                r.add("functoriality fails: D(" + pair_name(fc, b) + ") D(" + pair_name(fc, a) + ") != D(" +
                      pair_name(fc, ba) + ")");
        }

    for (MorId p = 0; p < fc.pair_count(); ++p) {
        const FPair& q = fc.pair(p);
        const MorId f = q.source_object;
        const MorId fh = c.table(f, q.h);
        const MorId kf = c.table(q.k, f);
        const GroupHom via_left = hom_compose(d.action(fh, c.identity(c.source(fh)), q.k), d.action(f, q.h, c.identity(c.target(f))));
        const GroupHom via_right = hom_compose(d.action(kf, q.h, c.identity(c.target(kf))), d.action(f, c.identity(c.source(f)), q.k));
        if (!homs_equal(d.action(p), via_left) || !homs_equal(d.action(p), via_right))
            r.add("D(h,k) != D(1,k) D(h,1) or != D(h,1) D(1,k) at " + pair_name(fc, p));
    }
    return r;
}

NaturalSystem complete_from_generators(const FactorizationPtr& fc, const SystemGenerators& gens)
{
    const FiniteCategory& c = *fc->base();
    if (gens.values.size() != c.morphism_count())
        throw DimensionMismatch("complete_from_generators: one value per morphism required");
    ValidationReport missing;
    auto left = [&](MorId f, MorId h) -> const GroupHom* {
        auto it = gens.precompose.find({f, h});
        if (it != gens.precompose.end()) return &it->second;
        return nullptr;
    };
    auto right = [&](MorId f, MorId k) -> const GroupHom* {
        auto it = gens.postcompose.find({f, k});
        if (it != gens.postcompose.end()) return &it->second;
        return nullptr;
    };
    std::vector<GroupHom> actions;
    actions.reserve(fc->pair_count());
    for (MorId p = 0; p < fc->pair_count(); ++p) {
        const FPair& q = fc->pair(p);
        const MorId f = q.source_object;
        const MorId fh = c.table(f, q.h);
        GroupHom l = c.is_identity(q.h) && !left(f, q.h) ? GroupHom::identity(gens.values[f])
                                                          : (left(f, q.h) ? *left(f, q.h) : GroupHom());
        GroupHom rt = c.is_identity(q.k) && !right(fh, q.k) ? GroupHom::identity(gens.values[fh])
                                                             : (right(fh, q.k) ? *right(fh, q.k) : GroupHom());
        if (!l.source()) {
            missing.add("missing generator D(" + c.morphism_name(q.h) + ",1) at '" + c.morphism_name(f) + "'");
            continue;
        }
        if (!rt.source()) {
            missing.add("missing generator D(1," + c.morphism_name(q.k) + ") at '" + c.morphism_name(fh) + "'");
            continue;
        }
        actions.push_back(hom_compose(rt, l));
    }
    if (!missing.ok()) throw ValidationError("natural system generators incomplete", missing);
    return NaturalSystem(fc, gens.values, std::move(actions));
}

NaturalSystem constant_system(const FactorizationPtr& fc, const GroupPtr& g)
{
    std::vector<GroupPtr> values(fc->base()->morphism_count(), g);
    std::vector<GroupHom> actions(fc->pair_count(), GroupHom::identity(g));
    return NaturalSystem(fc, std::move(values), std::move(actions));
}

ValidationReport validate_bifunctor(const Bifunctor& b)
{
    ValidationReport r;
    const FiniteCategory& c = *b.base;
    const std::size_t n = c.object_count(), m = c.morphism_count();
    if (b.values.size() != n * n) r.add("bifunctor needs one value per pair of objects");
    if (b.actions.size() != m * m) r.add("bifunctor needs one action per pair of morphisms");
    if (!r.ok()) return r;
    const FiniteCategory prod = product(opposite(c), c);
    for (MorId a = 0; a < m * m; ++a) {
        const GroupHom& act = b.actions[a];
        if (!act.source() || !same_group(act.source(), b.values[prod.source(a)]) ||
            !same_group(act.target(), b.values[prod.target(a)])) {
            r.add("B" + prod.morphism_name(a) + " has the wrong source or target");
            continue;
        }
        if (!act.is_well_defined()) r.add("B" + prod.morphism_name(a) + " is not well defined");
    }
    if (!r.ok()) return r;
    for (ObjId x = 0; x < n * n; ++x)
        if (!homs_equal(b.actions[prod.identity(x)], GroupHom::identity(b.values[x])))
            r.add("B does not preserve the identity of " + prod.object_name(x));
    for (MorId g = 0; g < m * m; ++g)
        for (MorId f : prod.into(prod.source(g)))
            if (!homs_equal(b.actions[prod.table(g, f)], hom_compose(b.actions[g], b.actions[f])))
                r.add("B does not preserve the composite of " + prod.morphism_name(f) + " and " + prod.morphism_name(g));
    return r;
}

NaturalSystem from_bifunctor(const FactorizationPtr& fc, const Bifunctor& b)
{
    if (!same_category(fc->base(), b.base)) throw BifunctorInvalid("from_bifunctor: base categories differ");
    ValidationReport r = validate_bifunctor(b);
    if (!r.ok()) throw BifunctorInvalid("from_bifunctor: " + r.violations.front());
    const FiniteCategory& c = *b.base;
    const std::size_t n = c.object_count(), m = c.morphism_count();
    std::vector<GroupPtr> values(m);
    for (MorId f = 0; f < m; ++f) values[f] = b.values[c.source(f) * n + c.target(f)];
    std::vector<GroupHom> actions(fc->pair_count());
    for (MorId p = 0; p < actions.size(); ++p) actions[p] = b.actions[fc->pair(p).h * m + fc->pair(p).k];
    return NaturalSystem(fc, std::move(values), std::move(actions));
}

Bifunctor hom_bifunctor(const CatPtr& cp, const Integer& modulus)
{
    const FiniteCategory& c = *cp;
    const std::size_t n = c.object_count(), m = c.morphism_count();
    Bifunctor b{cp, std::vector<GroupPtr>(n * n), std::vector<GroupHom>(m * m)};
    std::vector<std::size_t> position(m);
    for (ObjId x = 0; x < n; ++x)
        for (ObjId y = 0; y < n; ++y) {
            const auto& hom = c.hom(x, y);
            for (std::size_t i = 0; i < hom.size(); ++i) position[hom[i]] = i;
            b.values[x * n + y] = free_or_mod(hom.size(), modulus);
        }
    for (MorId h = 0; h < m; ++h)
        for (MorId k = 0; k < m; ++k) {
            // h: X' -> X, k: Y -> Y'; B(X, Y) -> B(X', Y')
            const ObjId x = c.target(h), xp = c.source(h), y = c.source(k), yp = c.target(k);
            std::vector<std::size_t> image;
            for (MorId u : c.hom(x, y)) image.push_back(position[c.table(k, c.table(u, h))]);
            b.actions[h * m + k] = basis_hom(b.values[x * n + y], b.values[xp * n + yp],
                                             basis_map(c.hom(xp, yp).size(), image), modulus);
        }
    return b;
}

NaturalSystem representable_system(const FactorizationPtr& fc, MorId f0, const Integer& modulus)
{
    const FiniteCategory& cat = *fc->category();
    const std::size_t m = cat.object_count();
    std::vector<std::size_t> position(cat.morphism_count());
    std::vector<GroupPtr> values(m);
    for (MorId f = 0; f < m; ++f) {
        const auto& hom = cat.hom(f0, f);
        for (std::size_t i = 0; i < hom.size(); ++i) position[hom[i]] = i;
        values[f] = free_or_mod(hom.size(), modulus);
    }
    std::vector<GroupHom> actions(fc->pair_count());
    for (MorId p = 0; p < actions.size(); ++p) {
        const MorId f = cat.source(p), g = cat.target(p);
        std::vector<std::size_t> image;
        for (MorId q : cat.hom(f0, f)) image.push_back(position[cat.table(p, q)]);
        actions[p] = basis_hom(values[f], values[g], basis_map(cat.hom(f0, g).size(), image), modulus);
    }
    return NaturalSystem(fc, std::move(values), std::move(actions));
}

NaturalSystem character_system(const FactorizationPtr& fc, const std::vector<int>& left, const std::vector<int>& right,
                               const Integer& modulus)
{
    GroupPtr g = make_group(PresentedGroup::cyclic(modulus));
    std::vector<GroupPtr> values(fc->base()->morphism_count(), g);
    std::vector<GroupHom> actions(fc->pair_count());
    for (MorId p = 0; p < actions.size(); ++p)
        actions[p] = GroupHom::scalar(g, Integer(left.at(fc->pair(p).h) * right.at(fc->pair(p).k)));
    return NaturalSystem(fc, std::move(values), std::move(actions));
}

NaturalSystem direct_sum(const NaturalSystem& a, const NaturalSystem& b)
{
    if (!same_category(a.factorization()->category(), b.factorization()->category()))
        throw ShapeMismatch("direct_sum: systems live on different categories");
    std::vector<GroupPtr> values(a.values().size());
    for (MorId f = 0; f < values.size(); ++f)
        values[f] = make_group(direct_product(std::vector<GroupPtr>{a.value(f), b.value(f)}));
    std::vector<GroupHom> actions(a.actions().size());
    for (MorId p = 0; p < actions.size(); ++p) {
        const FPair& q = a.factorization()->pair(p);
        const GroupHom& x = a.action(p);
        const GroupHom& y = b.action(p);
        actions[p] = GroupHom::assembled(values[q.source_object], values[q.target_object],
                                         IntMatrix::block_diagonal({&x.matrix(), &y.matrix()}),
                                         IntMatrix::block_diagonal({&x.witness(), &y.witness()}));
    }
    return NaturalSystem(a.factorization(), std::move(values), std::move(actions));
}

NaturalSystem reduce_mod(const NaturalSystem& d, const Integer& k)
{
    std::vector<GroupPtr> values(d.values().size());
    for (MorId f = 0; f < values.size(); ++f) {
        const PresentedGroup& g = *d.value(f);
        values[f] = make_group(PresentedGroup(g.generators(), IntMatrix::hstack(g.relations(), IntMatrix::scalar(g.generators(), k))));
    }
    std::vector<GroupHom> actions(d.actions().size());
    for (MorId p = 0; p < actions.size(); ++p) {
        const FPair& q = d.factorization()->pair(p);
        const GroupHom& a = d.action(p);
        // M [R | kI] = [R | kI] diag(W, M)
        actions[p] = GroupHom::assembled(values[q.source_object], values[q.target_object], a.matrix(),
                                         IntMatrix::block_diagonal({&a.witness(), &a.matrix()}));
    }
    return NaturalSystem(d.factorization(), std::move(values), std::move(actions));
}

NatSysMorphism reduction_map(const SystemPtr& d, const SystemPtr& reduced)
{
    std::vector<GroupHom> comps;
    comps.reserve(d->values().size());
    for (MorId f = 0; f < d->values().size(); ++f) {
        const std::size_t g = d->value(f)->generators(), r = d->value(f)->relation_count();
        comps.push_back(GroupHom::assembled(d->value(f), reduced->value(f), IntMatrix::identity(g),
                                            IntMatrix::vstack(IntMatrix::identity(r), IntMatrix(g, r))));
    }
    return NatSysMorphism(NaturalTransformation::identity(Functor::identity(d->base())), d, reduced, std::move(comps));
}

NaturalSystem pullback(const NaturalSystem& d, const Functor& g, const FactorizationPtr& fd)
{
    if (!same_category(g.target(), d.factorization()->category()) || !same_category(g.source(), fd->category()))
        throw ShapeMismatch("pullback: functor does not run between the factorization categories");
    std::vector<GroupPtr> values(fd->base()->morphism_count());
    for (MorId f = 0; f < values.size(); ++f) values[f] = d.value(g(f));
    std::vector<GroupHom> actions(fd->pair_count());
    for (MorId p = 0; p < actions.size(); ++p) actions[p] = d.action(g.on_morphism(p));
    return NaturalSystem(fd, std::move(values), std::move(actions));
}

NaturalSystem pullback_along_nat(const NaturalSystem& d, const NaturalTransformation& alpha, const FactorizationPtr& fd)
{
    return pullback(d, factor_nat(alpha, *fd, *d.factorization()), fd);
}

NatSysMorphism::NatSysMorphism(NaturalTransformation anchor, SystemPtr source, SystemPtr target,
                               std::vector<GroupHom> components)
    : anchor_(std::move(anchor)), source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    if (!same_category(source_->base(), anchor_.codomain()) || !same_category(target_->base(), anchor_.domain()))
        throw ShapeMismatch("NatSysMorphism: systems do not sit on the anchor's categories");
    factored_ = factor_nat(anchor_, *target_->factorization(), *source_->factorization());
    if (components_.size() != target_->base()->morphism_count())
        throw DimensionMismatch("NatSysMorphism: one component per morphism of the target base required");
    for (MorId s = 0; s < components_.size(); ++s)
        if (!components_[s].source() || !same_group(components_[s].source(), source_->value(factored_(s))) ||
            !same_group(components_[s].target(), target_->value(s)))
            throw ShapeMismatch("NatSysMorphism: component at '" + target_->base()->morphism_name(s) +
                                "' has the wrong source or target group");
}

NatSysMorphism NatSysMorphism::identity(const SystemPtr& d)
{
    std::vector<GroupHom> comps;
    comps.reserve(d->values().size());
    for (const auto& g : d->values()) comps.push_back(GroupHom::identity(g));
    return NatSysMorphism(NaturalTransformation::identity(Functor::identity(d->base())), d, d, std::move(comps));
}

ValidationReport validate_natsys_morphism(const NatSysMorphism& t)
{
    ValidationReport r;
    const FactorizationCategory& fd = *t.target()->factorization();
    for (MorId s = 0; s < t.components().size(); ++s)
        if (!t.component(s).is_well_defined())
            r.add("component at '" + fd.base()->morphism_name(s) + "' is not well defined");
    if (!r.ok()) return r;
    for (MorId p = 0; p < fd.pair_count(); ++p) {
        const FPair& q = fd.pair(p);
        const GroupHom lhs = hom_compose(t.component(q.target_object), t.source()->action(t.factored_anchor().on_morphism(p)));
        const GroupHom rhs = hom_compose(t.target()->action(p), t.component(q.source_object));
        if (!homs_equal(lhs, rhs)) r.add("naturality fails at " + pair_name(fd, p));
    }
    return r;
}

NatSysMorphism compose_natsys_morphisms(const NatSysMorphism& s, const NatSysMorphism& t)
{
    if (!same_system(t.target(), s.source()))
        throw ShapeMismatch("compose_natsys_morphisms: target of t is not the source of s");
    NaturalTransformation anchor = horizontal_compose(t.anchor(), s.anchor());
    const Functor& fb = s.factored_anchor();
    std::vector<GroupHom> comps(s.components().size());
    for (MorId sigma = 0; sigma < comps.size(); ++sigma)
        comps[sigma] = hom_compose(s.component(sigma), t.component(fb(sigma)));
    return NatSysMorphism(std::move(anchor), t.source(), s.target(), std::move(comps));
}

NatSysMorphism whisker(const NatSysMorphism& t, const NaturalTransformation& beta, const FactorizationPtr& fe)
{
    const NaturalSystem& e = *t.target();
    Functor fb = factor_nat(beta, *fe, *e.factorization());
    SystemPtr pulled = make_system(pullback(e, fb, fe));
    std::vector<GroupHom> comps(fe->base()->morphism_count());
    for (MorId sigma = 0; sigma < comps.size(); ++sigma) {
        const GroupHom& c = t.component(fb(sigma));
        comps[sigma] = GroupHom::assembled(c.source(), pulled->value(sigma), c.matrix(), c.witness());
    }
    return NatSysMorphism(horizontal_compose(t.anchor(), beta), t.source(), std::move(pulled), std::move(comps));
}

NatSysMorphism act_by_two_morphism(const SystemPtr& d, const TwoCell& cell, const FactorizationPtr& fd,
                                   SystemPtr pulled_alpha, SystemPtr pulled_beta)
{
    NaturalTransformation fcell = factor_two_morphism(cell, *fd, *d->factorization());
    if (!pulled_alpha) pulled_alpha = make_system(pullback(*d, fcell.source(), fd));
    if (!pulled_beta) pulled_beta = make_system(pullback(*d, fcell.target(), fd));
    std::vector<GroupHom> comps(fd->base()->morphism_count());
    for (MorId sigma = 0; sigma < comps.size(); ++sigma) {
        const GroupHom& a = d->action(fcell[sigma]);
        comps[sigma] = GroupHom::assembled(pulled_alpha->value(sigma), pulled_beta->value(sigma), a.matrix(), a.witness());
    }
    return NatSysMorphism(NaturalTransformation::identity(Functor::identity(fd->base())), std::move(pulled_alpha),
                          std::move(pulled_beta), std::move(comps));
}

bool is_natural_isomorphism(const NatSysMorphism& t)
{
    for (const auto& c : t.components())
        if (!is_iso(c)) return false;
    return true;
}

} // namespace bwc
