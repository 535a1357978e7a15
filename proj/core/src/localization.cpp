#include "bwcohom/localization.hpp"

namespace bwc {

namespace {

// Shared by both adjunction flavours; `co` selects the colocal conventions.
struct Adjunction {
    const CatPtr& big;
    const CatPtr& small;
    const Functor& phi;
    const Functor& psi;
    const NaturalTransformation& alpha;
    bool co;
};

Adjunction view(const Localization& l) { return {l.big, l.small, l.phi, l.psi, l.alpha, false}; }
Adjunction view(const Colocalization& l) { return {l.big, l.small, l.phi, l.psi, l.alpha, true}; }

ValidationReport validate(const Adjunction& a)
{
    ValidationReport r;
    const char* kind = a.co ? "colocalization: " : "localization: ";
    auto prefixed = [&](const ValidationReport& sub, const std::string& what) {
        for (const auto& v : sub.violations) r.add(kind + what + ": " + v);
    };
    if (!same_category(a.phi.source(), a.big) || !same_category(a.phi.target(), a.small) ||
        !same_category(a.psi.source(), a.small) || !same_category(a.psi.target(), a.big)) {
        r.add(std::string(kind) + "phi and psi do not run between the two categories");
        return r;
    }
    prefixed(validate_functor(a.phi), "phi");
    prefixed(validate_functor(a.psi), "psi");
    if (!r.ok()) return r;
    const Functor one = Functor::identity(a.big);
    const Functor xi = compose(a.psi, a.phi);
    const Functor& from = a.co ? xi : one;
    const Functor& to = a.co ? one : xi;
    if (!(a.alpha.source() == from) || !(a.alpha.target() == to)) {
        r.add(std::string(kind) + (a.co ? "alpha must run psi phi => 1" : "alpha must run 1 => psi phi"));
        return r;
    }
    prefixed(validate_natural_transformation(a.alpha), "alpha");
    if (!(compose(a.phi, a.psi) == Functor::identity(a.small))) r.add(std::string(kind) + "phi psi != 1");
    if (!r.ok()) return r;
    const FiniteCategory& c = *a.big;
    const FiniteCategory& d = *a.small;
    for (ObjId x = 0; x < c.object_count(); ++x)
        if (!d.is_identity(a.phi.on_morphism(a.alpha[x])))
            r.add(std::string(kind) + "phi(alpha_" + c.object_name(x) + ") is not an identity");
    for (ObjId y = 0; y < d.object_count(); ++y)
        if (!c.is_identity(a.alpha[a.psi(y)]))
            r.add(std::string(kind) + "alpha_psi(" + d.object_name(y) + ") is not an identity");
    return r;
}

std::vector<MorId> inverted(const Adjunction& a)
{
    std::vector<MorId> out;
    for (MorId f = 0; f < a.big->morphism_count(); ++f)
        if (a.small->is_iso(a.phi.on_morphism(f))) out.push_back(f);
    return out;
}

// With `at_identities` only D(1_X, g) (colocal: D(g, 1_Y)) is tested.  That
// weaker condition does not imply D ~ D F(alpha): on the poset p0 < p2 < p3
// reflected onto {p0, p3}, the representable system at p0 < p3 passes it, yet
// D(p0 < p2) = 0 while D(alpha_p2 (p0 < p2)) = Z.
std::optional<MorId> witness(const NaturalSystem& d, const Adjunction& a, bool at_identities = false)
{
    const FiniteCategory& c = *a.big;
    for (MorId g : inverted(a)) {
        const ObjId joint = a.co ? c.target(g) : c.source(g);
        for (MorId f = 0; f < c.morphism_count(); ++f) {
            if (a.co ? c.source(f) != joint : c.target(f) != joint) continue;
            if (at_identities && f != c.identity(joint)) continue;
            const GroupHom& act = a.co ? d.action(f, g, c.identity(c.target(f))) : d.action(f, c.identity(c.source(f)), g);
            if (!is_iso(act)) return g;
        }
    }
    return std::nullopt;
}

NatSysMorphism comparison(const SystemPtr& d, const Adjunction& a, SystemPtr pulled)
{
    if (!pulled) pulled = make_system(pullback_along_nat(*d, a.alpha, d->factorization()));
    const FiniteCategory& c = *a.big;
    std::vector<GroupHom> comps(c.morphism_count());
    for (MorId f = 0; f < comps.size(); ++f) {
        const GroupHom& act = a.co ? d->action(f, a.alpha[c.source(f)], c.identity(c.target(f)))
                                   : d->action(f, c.identity(c.source(f)), a.alpha[c.target(f)]);
        comps[f] = GroupHom::assembled(d->value(f), pulled->value(f), act.matrix(), act.witness());
    }
    return NatSysMorphism(NaturalTransformation::identity(Functor::identity(a.big)), d, std::move(pulled),
                          std::move(comps));
}

Characterization characterize(const SystemPtr& d, const Adjunction& a)
{
    Characterization ch;
    ch.witness = witness(*d, a);
    ch.condition1 = !ch.witness;
    ch.at_identities = !witness(*d, a, true);
    ch.condition3 = is_natural_isomorphism(comparison(d, a, nullptr));
    if (ch.condition3) ch.condition2 = true;
    return ch;
}

bool same_components(const NatSysMorphism& a, const NatSysMorphism& b)
{
    if (!(a.anchor() == b.anchor()) || a.components().size() != b.components().size()) return false;
    for (MorId s = 0; s < a.components().size(); ++s)
        if (!homs_equal(a.component(s), b.component(s))) return false;
    return true;
}

void require_same_map(const GradedMap& x, const GradedMap& y, const std::string& what)
{
    for (std::size_t k = 0; k <= x.max_degree(); ++k)
        require_equal(x.at(k), y.at(k), what, k, *x.source(), k, *x.target(), k);
}

std::vector<GroupHom> identities_onto(const SystemPtr& target)
{
    std::vector<GroupHom> out;
    for (const auto& g : target->values()) out.push_back(GroupHom::identity(g));
    return out;
}

std::string deg(std::size_t n) { return std::to_string(n); }

TheoremReport theorem(const SystemPtr& d, const Adjunction& a, std::size_t N)
{
    {
        ValidationReport r = validate(a);
        if (!r.ok()) throw ValidationError("theorem: invalid adjunction data", r);
    }
    if (!same_category(d->base(), a.big)) throw ShapeMismatch("theorem: the system does not live on the big category");
    if (auto w = witness(*d, a))
        throw NotLocal(std::string("system is not ") + (a.co ? "colocal" : "local"), a.big->morphism_name(*w));

    const FiniteCategory& c = *a.big;
    const FactorizationPtr& fc = d->factorization();
    const FactorizationPtr fd = build_factorization(a.small);
    const Functor xi = compose(a.psi, a.phi);
    const NaturalTransformation one_c = NaturalTransformation::identity(Functor::identity(a.big));
    const NaturalTransformation one_xi = NaturalTransformation::identity(xi);
    const NaturalTransformation one_phi = NaturalTransformation::identity(a.phi);
    const NaturalTransformation one_psi = NaturalTransformation::identity(a.psi);

    const SystemPtr e = make_system(pullback(*d, factor_functor(a.psi, *fd, *fc), fd)); // D F(psi)
    const SystemPtr dp = make_system(pullback_along_nat(*d, a.alpha, fc));               // D' = D F(alpha)
    const ComplexPtr A = build_complex(d, N);
    const ComplexPtr B = build_complex(e, N);

    TheoremReport report;
    report.big = cohomology_all(*A);
    report.small = cohomology_all(*B);

    Certificate ca{"(a) invariants", {}};
    for (std::size_t n = 0; n < N; ++n) {
        if (!(report.big[n] == report.small[n]))
            throw IdentityViolation("certificate (a): H^" + deg(n) + " differs: " + report.big[n].to_string() + " vs " +
                                        report.small[n].to_string(),
                                    static_cast<int>(n), "invariants");
        ca.steps.push_back("H^" + deg(n) + " = " + report.big[n].to_string() + " on both sides");
    }
    report.certificates.push_back(std::move(ca));

    // u: D => D', its inverse, and t'_f: D(xi f) -> D'(f)
    const NatSysMorphism u = comparison(d, a, dp);
    std::vector<GroupHom> uinv_c, tq_c, q_c;
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        uinv_c.push_back(hom_inverse(u.component(f)));
        const MorId xf = xi.on_morphism(f);
        const GroupHom& act = a.co ? d->action(xf, c.identity(c.source(xf)), a.alpha[c.target(f)])
                                   : d->action(xf, a.alpha[c.source(f)], c.identity(c.target(xf)));
        tq_c.push_back(GroupHom::assembled(e->value(a.phi.on_morphism(f)), dp->value(f), act.matrix(), act.witness()));
        q_c.push_back(hom_compose(uinv_c.back(), tq_c.back()));
    }
    const NatSysMorphism uinv(one_c, dp, d, uinv_c);
    const NatSysMorphism pm(one_psi, d, e, identities_onto(e));
    const NatSysMorphism qm(one_phi, e, d, q_c);
    const GradedMap P = induced_map_nat(pm, A, B);
    const GradedMap Q = induced_map_nat(qm, B, A);

    Certificate cb{"(b) inverse on cohomology", {}};
    for (std::size_t n = 0; n < N; ++n) {
        const Subquotient sa = cohomology_subquotient(*A, n);
        const Subquotient sb = cohomology_subquotient(*B, n);
        const GroupHom hp = induced_on_cohomology(P, n, sa, sb);
        const GroupHom hq = induced_on_cohomology(Q, n, sb, sa);
        if (!homs_equal(hom_compose(hq, hp), GroupHom::identity(hp.source())))
            throw IdentityViolation("certificate (b): H(Q)H(P) != 1", static_cast<int>(n), "H^" + deg(n) + "(C, D)");
        if (!homs_equal(hom_compose(hp, hq), GroupHom::identity(hq.source())))
            throw IdentityViolation("certificate (b): H(P)H(Q) != 1", static_cast<int>(n), "H^" + deg(n) + "(𝒟, DF(psi))");
        cb.steps.push_back("H^" + deg(n) + ": H(Q)H(P) = 1 and H(P)H(Q) = 1");
    }
    report.certificates.push_back(std::move(cb));

    Certificate cc{"(c) homotopy route", {}};
    const ComplexPtr A1 = build_complex(dp, N);
    const NatSysMorphism p1m(one_psi, dp, e, identities_onto(e));
    const NatSysMorphism q1m(one_phi, e, dp, tq_c);
    const GradedMap P1 = induced_map_nat(p1m, A1, B);
    const GradedMap Q1 = induced_map_nat(q1m, B, A1);

    if (!same_components(compose_natsys_morphisms(p1m, q1m), NatSysMorphism::identity(e)))
        throw IdentityViolation("certificate (c): (1_psi, 1)(1_phi, t') != (1, 1)", 0, "Nat_F");
    require_same_map(graded_compose(P1, Q1), graded_identity(B), "certificate (c): P'Q' = 1");
    cc.steps.push_back("(1_psi, 1)(1_phi, t') = (1_𝒟, 1) in Nat_F and P'Q' = 1 on F*(𝒟, DF(psi))");

    const NatSysMorphism xim = compose_natsys_morphisms(q1m, p1m);
    if (!(xim.anchor() == one_xi)) throw IdentityViolation("certificate (c): composite not anchored at 1_xi", 0, "Nat_F");
    const GradedMap QP1 = induced_map_nat(xim, A1, A1);
    require_same_map(graded_compose(Q1, P1), QP1, "certificate (c): Q'P' = F*(1_xi, t)");
    cc.steps.push_back("Q'P' = F*(1_xi, 1_D*F(" + std::string(a.co ? "1_xi, alpha" : "alpha, 1_xi") + "))");

    const NatSysMorphism onem = NatSysMorphism::identity(dp);
    const NatSysMorphism alm(a.alpha, dp, dp, identities_onto(dp));
    const NatTwoCell cell1 = a.co ? NatTwoCell{TwoCell{one_c, a.alpha, a.alpha, one_c}, onem, alm}
                                  : NatTwoCell{TwoCell{one_c, a.alpha, one_c, a.alpha}, onem, alm};
    const NatTwoCell cell2 = a.co ? NatTwoCell{TwoCell{one_xi, a.alpha, one_xi, a.alpha}, xim, alm}
                                  : NatTwoCell{TwoCell{one_xi, a.alpha, a.alpha, one_xi}, xim, alm};
    const GradedMap h1 = homotopy_h(cell1, A1, A1);
    const GradedMap h2 = homotopy_h(cell2, A1, A1);
    const GradedMap H = graded_sub(h1, h2);
    check_homotopy(H, graded_identity(A1), QP1, "certificate (c): dH + Hd = -1 + Q'P'");
    cc.steps.push_back(a.co ? "H = h_(alpha, 1) - h_(1_xi, alpha): dH + Hd = -1 + Q'P' on F*(C, D')"
                            : "H = h_(1, alpha) - h_(alpha, 1_xi): dH + Hd = -1 + Q'P' on F*(C, D')");

    const GradedMap U = induced_map_nat(u, A, A1);
    const GradedMap Uinv = induced_map_nat(uinv, A1, A);
    require_same_map(graded_compose(Uinv, U), graded_identity(A), "certificate (c): U^{-1}U = 1");
    require_same_map(graded_compose(P1, U), P, "certificate (c): P = P'U");
    require_same_map(graded_compose(Uinv, Q1), Q, "certificate (c): Q = U^{-1}Q'");
    const GradedMap HD = graded_compose(Uinv, graded_compose(H, U));
    check_homotopy(HD, graded_identity(A), graded_compose(Q, P), "certificate (c): dH_D + H_D d = -1 + QP");
    cc.steps.push_back("P = P'U, Q = U^{-1}Q' and H_D = U^{-1}HU: dH_D + H_D d = -1 + QP on F*(C, D)");
    report.certificates.push_back(std::move(cc));
    return report;
}

Functor mirror(const Functor& f, const CatPtr& src, const CatPtr& tgt)
{
    return Functor(src, tgt, f.object_map(), f.morphism_map());
}

} // namespace

ValidationReport validate_localization(const Localization& l) { return validate(view(l)); }
ValidationReport validate_colocalization(const Colocalization& l) { return validate(view(l)); }

std::vector<MorId> inverted_morphisms(const Localization& l) { return inverted(view(l)); }
std::vector<MorId> inverted_morphisms(const Colocalization& l) { return inverted(view(l)); }

std::optional<MorId> locality_witness(const NaturalSystem& d, const Localization& l) { return witness(d, view(l)); }
std::optional<MorId> colocality_witness(const NaturalSystem& d, const Colocalization& l) { return witness(d, view(l)); }

NatSysMorphism canonical_comparison(const SystemPtr& d, const Localization& l, const SystemPtr& pulled)
{
    return comparison(d, view(l), pulled);
}

NatSysMorphism canonical_comparison(const SystemPtr& d, const Colocalization& l, const SystemPtr& pulled)
{
    return comparison(d, view(l), pulled);
}

Characterization local_characterization(const SystemPtr& d, const Localization& l) { return characterize(d, view(l)); }
Characterization colocal_characterization(const SystemPtr& d, const Colocalization& l)
{
    return characterize(d, view(l));
}

TheoremReport verify_localization_theorem(const SystemPtr& d, const Localization& l, std::size_t max_degree)
{
    return theorem(d, view(l), max_degree);
}

TheoremReport verify_colocalization_theorem(const SystemPtr& d, const Colocalization& l, std::size_t max_degree)
{
    return theorem(d, view(l), max_degree);
}

Colocalization opposite_localization(const Localization& l)
{
    CatPtr big = make_category(opposite(*l.big));
    CatPtr small = make_category(opposite(*l.small));
    Functor phi = mirror(l.phi, big, small);
    Functor psi = mirror(l.psi, small, big);
    NaturalTransformation alpha(compose(psi, phi), Functor::identity(big), l.alpha.components());
    return {big, small, std::move(phi), std::move(psi), std::move(alpha)};
}

Localization opposite_colocalization(const Colocalization& l)
{
    CatPtr big = make_category(opposite(*l.big));
    CatPtr small = make_category(opposite(*l.small));
    Functor phi = mirror(l.phi, big, small);
    Functor psi = mirror(l.psi, small, big);
    NaturalTransformation alpha(Functor::identity(big), compose(psi, phi), l.alpha.components());
    return {big, small, std::move(phi), std::move(psi), std::move(alpha)};
}

NaturalSystem opposite_system(const NaturalSystem& d, const FactorizationPtr& fop)
{
    if (fop->base()->morphism_count() != d.base()->morphism_count())
        throw ShapeMismatch("opposite_system: categories differ");
    std::vector<GroupHom> actions(fop->pair_count());
    for (MorId p = 0; p < actions.size(); ++p) {
        const FPair& q = fop->pair(p);
        actions[p] = d.action(q.source_object, q.k, q.h);
    }
    return NaturalSystem(fop, d.values(), std::move(actions));
}

Localization arrow_localization()
{
    CatPtr c = make_category(arrow_category());
    CatPtr d = make_category(terminal_category());
    Functor phi(c, d, {0, 0}, {0, 0, 0});
    Functor psi(d, c, {1}, {1});
    NaturalTransformation alpha(Functor::identity(c), compose(psi, phi), {2, 1});
    return {c, d, std::move(phi), std::move(psi), std::move(alpha)};
}

Colocalization arrow_colocalization()
{
    CatPtr c = make_category(arrow_category());
    CatPtr d = make_category(terminal_category());
    Functor phi(c, d, {0, 0}, {0, 0, 0});
    Functor psi(d, c, {0}, {0});
    NaturalTransformation alpha(compose(psi, phi), Functor::identity(c), {0, 2});
    return {c, d, std::move(phi), std::move(psi), std::move(alpha)};
}

Localization product_localization(const Localization& l, const CatPtr& k)
{
    CatPtr big = make_category(product(*l.big, *k));
    CatPtr small = make_category(product(*l.small, *k));
    const std::size_t ko = k->object_count(), km = k->morphism_count();
    auto times = [&](const Functor& f, const CatPtr& src, const CatPtr& tgt) {
        std::vector<ObjId> objs(src->object_count());
        for (ObjId x = 0; x < objs.size(); ++x) objs[x] = f(x / ko) * ko + x % ko;
        std::vector<MorId> mors(src->morphism_count());
        for (MorId m = 0; m < mors.size(); ++m) mors[m] = f.on_morphism(m / km) * km + m % km;
        return Functor(src, tgt, std::move(objs), std::move(mors));
    };
    Functor phi = times(l.phi, big, small);
    Functor psi = times(l.psi, small, big);
    std::vector<MorId> comps(big->object_count());
    for (ObjId x = 0; x < comps.size(); ++x) comps[x] = l.alpha[x / ko] * km + k->identity(x % ko);
    NaturalTransformation alpha(Functor::identity(big), compose(psi, phi), std::move(comps));
    return {big, small, std::move(phi), std::move(psi), std::move(alpha)};
}

Localization poset_reflection(const CatPtr& poset, const std::vector<ObjId>& reflector)
{
    const FiniteCategory& c = *poset;
    const std::size_t n = c.object_count();
    std::vector<ObjId> members;
    std::vector<ObjId> index(n, kNone);
    for (ObjId x = 0; x < n; ++x)
        if (reflector[x] == x) index[x] = members.size(), members.push_back(x);
    auto hom = [&](ObjId x, ObjId y) { auto h = c.hom(x, y); return h.empty() ? kNone : h.front(); };
    std::vector<bool> leq(members.size() * members.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < members.size(); ++i) {
        names.push_back(c.object_name(members[i]));
        for (std::size_t j = 0; j < members.size(); ++j) leq[i * members.size() + j] = hom(members[i], members[j]) != kNone;
    }
    CatPtr small = make_category(poset_category(members.size(), leq, names));
    const FiniteCategory& d = *small;
    auto dhom = [&](ObjId x, ObjId y) { auto h = d.hom(x, y); return h.empty() ? kNone : h.front(); };
    ValidationReport r;
    std::vector<ObjId> pobj(n);
    std::vector<MorId> pmor(c.morphism_count());
    for (ObjId x = 0; x < n; ++x) {
        pobj[x] = reflector[x] < n ? index[reflector[x]] : kNone;
        if (pobj[x] == kNone) r.add("reflector of '" + c.object_name(x) + "' is not a member");
    }
    if (!r.ok()) throw ValidationError("poset_reflection: bad reflector", r);
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        pmor[f] = dhom(pobj[c.source(f)], pobj[c.target(f)]);
        if (pmor[f] == kNone) r.add("reflector is not monotone at '" + c.morphism_name(f) + "'");
    }
    std::vector<MorId> unit(n);
    for (ObjId x = 0; x < n; ++x) {
        unit[x] = hom(x, reflector[x]);
        if (unit[x] == kNone) r.add("'" + c.object_name(x) + "' is not below its reflection");
    }
    if (!r.ok()) throw ValidationError("poset_reflection: bad reflector", r);
    std::vector<MorId> imor(d.morphism_count());
    for (MorId g = 0; g < imor.size(); ++g) imor[g] = hom(members[d.source(g)], members[d.target(g)]);
    Functor phi(poset, small, std::move(pobj), std::move(pmor));
    Functor psi(small, poset, members, std::move(imor));
    NaturalTransformation alpha(Functor::identity(poset), compose(psi, phi), std::move(unit));
    Localization l{poset, small, std::move(phi), std::move(psi), std::move(alpha)};
    r = validate_localization(l);
    if (!r.ok()) throw ValidationError("poset_reflection: not a localization", r);
    return l;
}

Localization identity_localization(const CatPtr& c)
{
    Functor id = Functor::identity(c);
    return {c, c, id, id, NaturalTransformation::identity(id)};
}

Colocalization identity_colocalization(const CatPtr& c)
{
    Functor id = Functor::identity(c);
    return {c, c, id, id, NaturalTransformation::identity(id)};
}

} // namespace bwc
