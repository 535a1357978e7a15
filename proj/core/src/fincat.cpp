#include "bwcohom/fincat.hpp"

#include <algorithm>
#include <numeric>

namespace bwc {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<MorId> identities, std::vector<MorId> composition)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      composition_(std::move(composition))
{
    const std::size_t n = objects_.size();
    const std::size_t m = morphisms_.size();
    if (identities_.size() != n) throw DimensionMismatch("FiniteCategory: one identity per object required");
    if (composition_.size() != m * m) throw DimensionMismatch("FiniteCategory: composition table must be |Mor|^2");
    for (const auto& f : morphisms_)
        if (f.source >= n || f.target >= n)
            throw DimensionMismatch("FiniteCategory: morphism '" + f.name + "' has an endpoint out of range");
    for (MorId i : identities_)
        if (i >= m) throw DimensionMismatch("FiniteCategory: identity id out of range");
    homs_.assign(n * n, {});
    into_.assign(n, {});
    for (MorId f = 0; f < m; ++f) {
        homs_[morphisms_[f].source * n + morphisms_[f].target].push_back(f);
        into_[morphisms_[f].target].push_back(f);
    }
}

FiniteCategory FiniteCategory::from_triples(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                                            std::vector<MorId> identities,
                                            const std::vector<std::array<MorId, 3>>& triples)
{
    const std::size_t m = morphisms.size();
    std::vector<MorId> table(m * m, kNone);
    for (const auto& [f, g, gf] : triples) {
        if (f >= m || g >= m || gf >= m) throw DimensionMismatch("FiniteCategory: composition triple out of range");
        table[g * m + f] = gf;
    }
    std::vector<bool> is_id(m, false);
    for (MorId i : identities)
        if (i < m) is_id[i] = true;
    for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f) {
            if (table[g * m + f] != kNone || morphisms[f].target != morphisms[g].source) continue;
            if (is_id[g]) table[g * m + f] = f;
            else if (is_id[f]) table[g * m + f] = g;
        }
    return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), std::move(table));
}

MorId FiniteCategory::compose(MorId g, MorId f) const
{
    if (f >= morphisms_.size() || g >= morphisms_.size()) throw NotComposable("compose: morphism id out of range");
    if (morphisms_[f].target != morphisms_[g].source)
        throw NotComposable("compose: target of '" + morphisms_[f].name + "' is not the source of '" +
                            morphisms_[g].name + "'");
    MorId r = table(g, f);
    if (r == kNone)
        throw NotComposable("compose: table has no entry for '" + morphisms_[g].name + "' after '" +
                            morphisms_[f].name + "'");
    return r;
}

MorId FiniteCategory::inverse(MorId f) const
{
    const ObjId x = source(f), y = target(f);
    for (MorId g : hom(y, x))
        if (table(g, f) == identities_[x] && table(f, g) == identities_[y]) return g;
    return kNone;
}

std::optional<ObjId> FiniteCategory::find_object(const std::string& name) const
{
    auto it = std::find(objects_.begin(), objects_.end(), name);
    if (it == objects_.end()) return std::nullopt;
    return static_cast<ObjId>(it - objects_.begin());
}

std::optional<MorId> FiniteCategory::find_morphism(const std::string& name) const
{
    for (MorId f = 0; f < morphisms_.size(); ++f)
        if (morphisms_[f].name == name) return f;
    return std::nullopt;
}

bool FiniteCategory::same_morphisms(const FiniteCategory& o) const
{
    if (morphisms_.size() != o.morphisms_.size()) return false;
    for (std::size_t f = 0; f < morphisms_.size(); ++f)
        if (morphisms_[f].name != o.morphisms_[f].name || morphisms_[f].source != o.morphisms_[f].source ||
            morphisms_[f].target != o.morphisms_[f].target)
            return false;
    return true;
}

CatPtr make_category(FiniteCategory c) { return std::make_shared<const FiniteCategory>(std::move(c)); }

bool same_category(const CatPtr& a, const CatPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

ValidationReport validate_category(const FiniteCategory& c)
{
    ValidationReport r;
    const std::size_t m = c.morphism_count();
    auto nm = [&](MorId f) { return "'" + c.morphism_name(f) + "'"; };

    for (ObjId x = 0; x < c.object_count(); ++x) {
        MorId i = c.identity(x);
        if (c.source(i) != x || c.target(i) != x)
            r.add("identity " + nm(i) + " of object '" + c.object_name(x) + "' is not an endomorphism of it");
    }
    if (!r.ok()) return r;

    bool table_ok = true;
    for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f) {
            const MorId gf = c.table(g, f);
            if (c.target(f) != c.source(g)) {
                if (gf != kNone) {
                    r.add("composition (" + nm(f) + ", " + nm(g) + ", " + (gf < m ? nm(gf) : std::to_string(gf)) +
                          ") is given for a non-composable pair");
                    table_ok = false;
                }
                continue;
            }
            if (gf == kNone || gf >= m) {
                r.add("composition (" + nm(f) + ", " + nm(g) + ") is missing");
                table_ok = false;
                continue;
            }
            if (c.source(gf) != c.source(f) || c.target(gf) != c.target(g)) {
                r.add("composition (" + nm(f) + ", " + nm(g) + ", " + nm(gf) + ") has wrong source or target");
                table_ok = false;
            }
        }
    if (!table_ok) return r;

    for (MorId f = 0; f < m; ++f) {
        if (c.table(c.identity(c.target(f)), f) != f) r.add("left identity law fails at " + nm(f));
        if (c.table(f, c.identity(c.source(f))) != f) r.add("right identity law fails at " + nm(f));
    }
    for (MorId f = 0; f < m; ++f)
        for (MorId g : c.into(c.source(f))) {
            const MorId fg = c.table(f, g);
            for (MorId h : c.into(c.source(g))) {
                if (c.table(fg, h) != c.table(f, c.table(g, h)))
                    r.add("associativity fails at (" + nm(h) + ", " + nm(g) + ", " + nm(f) + ")");
            }
        }
    return r;
}

Functor::Functor(CatPtr source, CatPtr target, std::vector<ObjId> objects, std::vector<MorId> morphisms)
    : source_(std::move(source)), target_(std::move(target)), objects_(std::move(objects)), morphisms_(std::move(morphisms))
{
    if (objects_.size() != source_->object_count() || morphisms_.size() != source_->morphism_count())
        throw DimensionMismatch("Functor: table sizes do not match the source category");
    for (ObjId y : objects_)
        if (y >= target_->object_count()) throw DimensionMismatch("Functor: object image out of range");
    for (MorId g : morphisms_)
        if (g >= target_->morphism_count()) throw DimensionMismatch("Functor: morphism image out of range");
}

Functor Functor::identity(const CatPtr& c)
{
    std::vector<ObjId> o(c->object_count());
    std::iota(o.begin(), o.end(), ObjId{0});
    std::vector<MorId> m(c->morphism_count());
    std::iota(m.begin(), m.end(), MorId{0});
    return Functor(c, c, std::move(o), std::move(m));
}

Functor Functor::constant(const CatPtr& source, const CatPtr& target, ObjId value)
{
    return Functor(source, target, std::vector<ObjId>(source->object_count(), value),
                   std::vector<MorId>(source->morphism_count(), target->identity(value)));
}

ValidationReport validate_functor(const Functor& fn)
{
    ValidationReport r;
    const FiniteCategory& c = *fn.source();
    const FiniteCategory& d = *fn.target();
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        const MorId g = fn.on_morphism(f);
        if (d.source(g) != fn(c.source(f)) || d.target(g) != fn(c.target(f)))
            r.add("image of '" + c.morphism_name(f) + "' has wrong endpoints");
    }
    for (ObjId x = 0; x < c.object_count(); ++x)
        if (fn.on_morphism(c.identity(x)) != d.identity(fn(x)))
            r.add("identity of '" + c.object_name(x) + "' is not preserved");
    if (!r.ok()) return r;
    for (MorId g = 0; g < c.morphism_count(); ++g)
        for (MorId f : c.into(c.source(g)))
            if (fn.on_morphism(c.table(g, f)) != d.table(fn.on_morphism(g), fn.on_morphism(f)))
                r.add("composition of ('" + c.morphism_name(f) + "', '" + c.morphism_name(g) + "') is not preserved");
    return r;
}

Functor compose(const Functor& g, const Functor& f)
{
    if (!same_category(f.target(), g.source())) throw ShapeMismatch("compose: functors are not composable");
    std::vector<ObjId> o(f.object_map().size());
    for (std::size_t x = 0; x < o.size(); ++x) o[x] = g(f(x));
    std::vector<MorId> m(f.morphism_map().size());
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = g.on_morphism(f.on_morphism(k));
    return Functor(f.source(), g.target(), std::move(o), std::move(m));
}

NaturalTransformation::NaturalTransformation(Functor source, Functor target, std::vector<MorId> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    if (!same_category(source_.source(), target_.source()) || !same_category(source_.target(), target_.target()))
        throw ShapeMismatch("NaturalTransformation: functors are not parallel");
    if (components_.size() != source_.source()->object_count())
        throw DimensionMismatch("NaturalTransformation: one component per object required");
    for (MorId a : components_)
        if (a >= source_.target()->morphism_count())
            throw DimensionMismatch("NaturalTransformation: component id out of range");
}

NaturalTransformation NaturalTransformation::identity(const Functor& f)
{
    std::vector<MorId> comps(f.source()->object_count());
    for (ObjId x = 0; x < comps.size(); ++x) comps[x] = f.target()->identity(f(x));
    return NaturalTransformation(f, f, std::move(comps));
}

ValidationReport validate_natural_transformation(const NaturalTransformation& a)
{
    ValidationReport r;
    const FiniteCategory& c = *a.domain();
    const FiniteCategory& d = *a.codomain();
    const Functor& phi = a.source();
    const Functor& psi = a.target();
    for (ObjId x = 0; x < c.object_count(); ++x)
        if (d.source(a[x]) != phi(x) || d.target(a[x]) != psi(x))
            r.add("component at '" + c.object_name(x) + "' has wrong endpoints");
    if (!r.ok()) return r;
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        const ObjId x = c.source(f), y = c.target(f);
        if (d.table(psi.on_morphism(f), a[x]) != d.table(a[y], phi.on_morphism(f)))
            r.add("naturality square of '" + c.morphism_name(f) + "' does not commute");
    }
    return r;
}

NaturalTransformation vertical_compose(const NaturalTransformation& beta, const NaturalTransformation& alpha)
{
    if (!(alpha.target() == beta.source())) throw ShapeMismatch("vertical_compose: target of alpha != source of beta");
    const FiniteCategory& d = *alpha.codomain();
    std::vector<MorId> comps(alpha.components().size());
    for (ObjId x = 0; x < comps.size(); ++x) comps[x] = d.compose(beta[x], alpha[x]);
    return NaturalTransformation(alpha.source(), beta.target(), std::move(comps));
}

NaturalTransformation horizontal_compose(const NaturalTransformation& beta, const NaturalTransformation& alpha)
{
    if (!same_category(alpha.codomain(), beta.domain()))
        throw ShapeMismatch("horizontal_compose: categories do not chain");
    const Functor& phi = alpha.source();
    const Functor& psi = alpha.target();
    const Functor& xi = beta.source();
    const Functor& zeta = beta.target();
    const FiniteCategory& e = *beta.codomain();
    std::vector<MorId> comps(alpha.components().size());
    for (ObjId x = 0; x < comps.size(); ++x) {
        const MorId one = e.compose(beta[psi(x)], xi.on_morphism(alpha[x]));
        const MorId two = e.compose(zeta.on_morphism(alpha[x]), beta[phi(x)]);
        if (one != two) throw NaturalityBroken("horizontal_compose: the two composite formulas disagree");
        comps[x] = one;
    }
    return NaturalTransformation(compose(xi, phi), compose(zeta, psi), std::move(comps));
}

NaturalTransformation whisker_left(const Functor& xi, const NaturalTransformation& alpha)
{
    return horizontal_compose(NaturalTransformation::identity(xi), alpha);
}

NaturalTransformation whisker_right(const NaturalTransformation& beta, const Functor& phi)
{
    return horizontal_compose(beta, NaturalTransformation::identity(phi));
}

ObjId sequence_object(const FiniteCategory& c, const MorphismSequence& s, std::size_t i)
{
    if (i == 0) return s.arrows.empty() ? s.head : c.target(s.arrows[0]);
    return c.source(s.arrows.at(i - 1));
}

MorId sequence_composite(const FiniteCategory& c, const MorphismSequence& s)
{
    if (s.arrows.empty()) return c.identity(s.head);
    MorId acc = s.arrows[0];
    for (std::size_t i = 1; i < s.arrows.size(); ++i) acc = c.table(acc, s.arrows[i]);
    return acc;
}

namespace {

void extend(const FiniteCategory& c, MorphismSequence& s, std::size_t n,
            const std::function<void(const MorphismSequence&)>& fn)
{
    if (s.arrows.size() == n) {
        fn(s);
        return;
    }
    const ObjId x = c.source(s.arrows.back());
    for (MorId g : c.into(x)) {
        s.arrows.push_back(g);
        extend(c, s, n, fn);
        s.arrows.pop_back();
    }
}

} // namespace

void for_each_sequence(const FiniteCategory& c, std::size_t n, const std::function<void(const MorphismSequence&)>& fn)
{
    MorphismSequence s;
    if (n == 0) {
        for (ObjId x = 0; x < c.object_count(); ++x) {
            s.head = x;
            fn(s);
        }
        return;
    }
    s.arrows.reserve(n);
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        s.head = c.target(f);
        s.arrows.assign(1, f);
        extend(c, s, n, fn);
    }
}

std::vector<MorphismSequence> enumerate_sequences(const FiniteCategory& c, std::size_t n)
{
    std::vector<MorphismSequence> out;
    for_each_sequence(c, n, [&](const MorphismSequence& s) { out.push_back(s); });
    return out;
}

std::size_t count_sequences(const FiniteCategory& c, std::size_t n)
{
    if (n == 0) return c.object_count();
    // ending[x] = number of chains of the current length whose last source is x
    std::vector<std::size_t> ending(c.object_count(), 0);
    for (MorId f = 0; f < c.morphism_count(); ++f) ++ending[c.source(f)];
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<std::size_t> next(c.object_count(), 0);
        for (MorId g = 0; g < c.morphism_count(); ++g) next[c.source(g)] += ending[c.target(g)];
        ending = std::move(next);
    }
    return std::accumulate(ending.begin(), ending.end(), std::size_t{0});
}

std::vector<std::vector<ObjId>> pi0(const FiniteCategory& c)
{
    std::vector<std::size_t> parent(c.object_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (MorId f = 0; f < c.morphism_count(); ++f) {
        std::size_t a = find(c.source(f)), b = find(c.target(f));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<ObjId>> comps;
    std::vector<std::size_t> slot(c.object_count(), kNone);
    for (ObjId x = 0; x < c.object_count(); ++x) {
        const std::size_t root = find(x);
        if (slot[root] == kNone) {
            slot[root] = comps.size();
            comps.emplace_back();
        }
        comps[slot[root]].push_back(x);
    }
    return comps;
}

FiniteCategory opposite(const FiniteCategory& c)
{
    const std::size_t m = c.morphism_count();
    std::vector<FiniteCategory::Morphism> mors(m);
    for (MorId f = 0; f < m; ++f) mors[f] = {c.morphism_name(f), c.target(f), c.source(f)};
    std::vector<MorId> ids(c.object_count());
    for (ObjId x = 0; x < ids.size(); ++x) ids[x] = c.identity(x);
    std::vector<MorId> table(m * m, kNone);
    for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f) table[g * m + f] = c.table(f, g);
    return FiniteCategory(c.object_names(), std::move(mors), std::move(ids), std::move(table));
}

FiniteCategory product(const FiniteCategory& c, const FiniteCategory& d)
{
    const std::size_t no = d.object_count(), nm = d.morphism_count();
    std::vector<std::string> objs;
    for (ObjId x = 0; x < c.object_count(); ++x)
        for (ObjId y = 0; y < no; ++y) objs.push_back("(" + c.object_name(x) + "," + d.object_name(y) + ")");
    std::vector<FiniteCategory::Morphism> mors;
    for (MorId f = 0; f < c.morphism_count(); ++f)
        for (MorId g = 0; g < nm; ++g)
            mors.push_back({"(" + c.morphism_name(f) + "," + d.morphism_name(g) + ")", c.source(f) * no + d.source(g),
                            c.target(f) * no + d.target(g)});
    std::vector<MorId> ids;
    for (ObjId x = 0; x < c.object_count(); ++x)
        for (ObjId y = 0; y < no; ++y) ids.push_back(c.identity(x) * nm + d.identity(y));
    const std::size_t m = mors.size();
    std::vector<MorId> table(m * m, kNone);
    for (MorId a = 0; a < m; ++a)
        for (MorId b = 0; b < m; ++b) {
            const MorId ca = c.table(a / nm, b / nm), da = d.table(a % nm, b % nm);
            if (ca != kNone && da != kNone) table[a * m + b] = ca * nm + da;
        }
    return FiniteCategory(std::move(objs), std::move(mors), std::move(ids), std::move(table));
}

FiniteCategory disjoint_union(const FiniteCategory& c, const FiniteCategory& d)
{
    const std::size_t co = c.object_count(), cm = c.morphism_count();
    std::vector<std::string> objs = c.object_names();
    for (const auto& n : d.object_names()) objs.push_back(n);
    std::vector<FiniteCategory::Morphism> mors;
    for (MorId f = 0; f < cm; ++f) mors.push_back({c.morphism_name(f), c.source(f), c.target(f)});
    for (MorId f = 0; f < d.morphism_count(); ++f)
        mors.push_back({d.morphism_name(f), co + d.source(f), co + d.target(f)});
    std::vector<MorId> ids;
    for (ObjId x = 0; x < co; ++x) ids.push_back(c.identity(x));
    for (ObjId x = 0; x < d.object_count(); ++x) ids.push_back(cm + d.identity(x));
    const std::size_t m = mors.size();
    std::vector<MorId> table(m * m, kNone);
    for (MorId g = 0; g < cm; ++g)
        for (MorId f = 0; f < cm; ++f) table[g * m + f] = c.table(g, f);
    for (MorId g = 0; g < d.morphism_count(); ++g)
        for (MorId f = 0; f < d.morphism_count(); ++f) {
            const MorId r = d.table(g, f);
            table[(cm + g) * m + cm + f] = r == kNone ? kNone : cm + r;
        }
    return FiniteCategory(std::move(objs), std::move(mors), std::move(ids), std::move(table));
}

FiniteCategory terminal_category() { return discrete_category(1); }

FiniteCategory discrete_category(std::size_t n)
{
    std::vector<std::string> objs;
    std::vector<FiniteCategory::Morphism> mors;
    std::vector<MorId> ids;
    for (std::size_t x = 0; x < n; ++x) {
        objs.push_back(n == 1 ? "*" : "o" + std::to_string(x));
        mors.push_back({"1_" + objs.back(), x, x});
        ids.push_back(x);
    }
    std::vector<MorId> table(n * n, kNone);
    for (std::size_t x = 0; x < n; ++x) table[x * n + x] = x;
    return FiniteCategory(std::move(objs), std::move(mors), std::move(ids), std::move(table));
}

FiniteCategory indiscrete_category(std::size_t n)
{
    std::vector<std::string> objs;
    for (std::size_t x = 0; x < n; ++x) objs.push_back("o" + std::to_string(x));
    // morphism (x, y) has id x * n + y
    std::vector<FiniteCategory::Morphism> mors;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            mors.push_back({x == y ? "1_" + objs[x] : objs[x] + "->" + objs[y], x, y});
    std::vector<MorId> ids;
    for (std::size_t x = 0; x < n; ++x) ids.push_back(x * n + x);
    const std::size_t m = n * n;
    std::vector<MorId> table(m * m, kNone);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t f = 0; f < m; ++f)
            if (f % n == g / n) table[g * m + f] = (f / n) * n + g % n;
    return FiniteCategory(std::move(objs), std::move(mors), std::move(ids), std::move(table));
}

FiniteCategory arrow_category()
{
    return FiniteCategory::from_triples({"x", "y"}, {{"1_x", 0, 0}, {"1_y", 1, 1}, {"f", 0, 1}}, {0, 1}, {});
}

FiniteCategory poset_category(std::size_t n, const std::vector<bool>& leq, std::vector<std::string> names)
{
    if (leq.size() != n * n) throw DimensionMismatch("poset_category: relation must be n x n");
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<FiniteCategory::Morphism> mors;
    std::vector<MorId> id_of(n * n, kNone);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq[i * n + j]) {
                id_of[i * n + j] = mors.size();
                mors.push_back({i == j ? "1_" + names[i] : names[i] + "<=" + names[j], i, j});
            }
    std::vector<MorId> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (id_of[i * n + i] == kNone) throw DimensionMismatch("poset_category: relation is not reflexive");
        ids[i] = id_of[i * n + i];
    }
    const std::size_t m = mors.size();
    std::vector<MorId> table(m * m, kNone);
    for (MorId g = 0; g < m; ++g)
        for (MorId f = 0; f < m; ++f)
            if (mors[f].target == mors[g].source) table[g * m + f] = id_of[mors[f].source * n + mors[g].target];
    return FiniteCategory(std::move(names), std::move(mors), std::move(ids), std::move(table));
}

FiniteCategory cyclic_group_category(std::size_t n)
{
    std::vector<std::size_t> mult(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mult[a * n + b] = (a + b) % n;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k)
        names.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
    return monoid_category(n, mult, 0, std::move(names));
}

FiniteCategory monoid_category(std::size_t size, const std::vector<std::size_t>& mult, std::size_t unit,
                               std::vector<std::string> names)
{
    if (mult.size() != size * size) throw DimensionMismatch("monoid_category: table must be size x size");
    if (names.empty())
        for (std::size_t k = 0; k < size; ++k) names.push_back("m" + std::to_string(k));
    std::vector<FiniteCategory::Morphism> mors;
    for (std::size_t k = 0; k < size; ++k) mors.push_back({names[k], 0, 0});
    std::vector<MorId> table(mult.begin(), mult.end());
    return FiniteCategory({"*"}, std::move(mors), {unit}, std::move(table));
}

namespace {

struct FunctorSearch {
    const FiniteCategory& c;
    const FiniteCategory& d;
    const CatPtr& cp;
    const CatPtr& dp;
    std::size_t limit;
    std::vector<ObjId> obj;
    std::vector<MorId> mor;
    // pairs (g, f) whose constraint can be checked once morphism k is assigned
    std::vector<std::vector<std::pair<MorId, MorId>>> checks;
    std::vector<Functor> out;

    void run()
    {
        const std::size_t m = c.morphism_count();
        checks.assign(m, {});
        for (MorId g = 0; g < m; ++g)
            for (MorId f : c.into(c.source(g))) {
                const MorId gf = c.table(g, f);
                checks[std::max({g, f, gf})].emplace_back(g, f);
            }
        obj.assign(c.object_count(), 0);
        mor.assign(m, kNone);
        objects(0);
    }

    void objects(std::size_t x)
    {
        if (out.size() >= limit) return;
        if (x == c.object_count()) {
            morphisms(0);
            return;
        }
        for (ObjId y = 0; y < d.object_count(); ++y) {
            obj[x] = y;
            objects(x + 1);
        }
    }

    void morphisms(std::size_t k)
    {
        if (out.size() >= limit) return;
        if (k == c.morphism_count()) {
            out.emplace_back(cp, dp, obj, mor);
            return;
        }
        auto consistent = [&]() {
            for (auto [g, f] : checks[k])
                if (d.table(mor[g], mor[f]) != mor[c.table(g, f)]) return false;
            return true;
        };
        if (c.is_identity(k)) {
            mor[k] = d.identity(obj[c.source(k)]);
            if (consistent()) morphisms(k + 1);
        } else {
            for (MorId g : d.hom(obj[c.source(k)], obj[c.target(k)])) {
                mor[k] = g;
                if (consistent()) morphisms(k + 1);
            }
        }
        mor[k] = kNone;
    }
};

} // namespace

std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d, std::size_t limit)
{
    FunctorSearch s{*c, *d, c, d, limit, {}, {}, {}, {}};
    s.run();
    return std::move(s.out);
}

std::vector<NaturalTransformation> enumerate_natural_transformations(const Functor& phi, const Functor& psi,
                                                                     std::size_t limit)
{
    if (!same_category(phi.source(), psi.source()) || !same_category(phi.target(), psi.target()))
        throw ShapeMismatch("enumerate_natural_transformations: functors are not parallel");
    const FiniteCategory& c = *phi.source();
    const FiniteCategory& d = *phi.target();
    std::vector<std::vector<MorId>> checks(c.object_count());
    for (MorId f = 0; f < c.morphism_count(); ++f) checks[std::max(c.source(f), c.target(f))].push_back(f);

    std::vector<NaturalTransformation> out;
    std::vector<MorId> comp(c.object_count(), kNone);
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
        if (out.size() >= limit) return;
        if (x == c.object_count()) {
            out.emplace_back(phi, psi, comp);
            return;
        }
        for (MorId a : d.hom(phi(x), psi(x))) {
            comp[x] = a;
            bool ok = true;
            for (MorId f : checks[x])
                if (d.table(psi.on_morphism(f), comp[c.source(f)]) != d.table(comp[c.target(f)], phi.on_morphism(f))) {
                    ok = false;
                    break;
                }
            if (ok) rec(x + 1);
        }
        comp[x] = kNone;
    };
    rec(0);
    return out;
}

} // namespace bwc
