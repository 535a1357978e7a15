#include "bwcohom/factorization.hpp"

#include <algorithm>
#include <tuple>

namespace bwc {

namespace {
std::uint64_t key(std::size_t m, MorId f, MorId h, MorId k)
{
    return (static_cast<std::uint64_t>(f) * m + h) * m + k;
}
} // namespace

FactorizationCategory::FactorizationCategory(CatPtr base) : base_(std::move(base))
{
    const FiniteCategory& c = *base_;
    const std::size_t m = c.morphism_count();

    for (MorId f = 0; f < m; ++f) {
        const ObjId y = c.target(f);
        for (MorId h : c.into(c.source(f))) {
            const MorId fh = c.table(f, h);
            for (MorId k = 0; k < m; ++k) {
                if (c.source(k) != y) continue;
                pairs_.push_back({f, c.table(k, fh), h, k});
            }
        }
    }
    std::sort(pairs_.begin(), pairs_.end(), [](const FPair& a, const FPair& b) {
        return std::tie(a.source_object, a.target_object, a.h, a.k) <
               std::tie(b.source_object, b.target_object, b.h, b.k);
    });

    std::vector<std::string> objects;
    for (MorId f = 0; f < m; ++f) objects.push_back(c.morphism_name(f));
    std::vector<FiniteCategory::Morphism> mors;
    mors.reserve(pairs_.size());
    for (MorId p = 0; p < pairs_.size(); ++p) {
        const FPair& q = pairs_[p];
        lookup_.emplace(key(m, q.source_object, q.h, q.k), p);
        mors.push_back({"(" + c.morphism_name(q.h) + "," + c.morphism_name(q.k) + "):" + c.morphism_name(q.source_object) +
                            "->" + c.morphism_name(q.target_object),
                        q.source_object, q.target_object});
    }
    std::vector<MorId> ids(m);
    for (MorId f = 0; f < m; ++f) ids[f] = find(f, c.identity(c.source(f)), c.identity(c.target(f)));

    const std::size_t n = pairs_.size();
    std::vector<MorId> table(n * n, kNone);
    for (MorId a = 0; a < n; ++a) {
        const FPair& first = pairs_[a];
        for (MorId b = 0; b < n; ++b) {
            const FPair& second = pairs_[b];
            if (second.source_object != first.target_object) continue;
            table[b * n + a] = find(first.source_object, c.table(first.h, second.h), c.table(second.k, first.k));
        }
    }
    fc_ = make_category(FiniteCategory(std::move(objects), std::move(mors), std::move(ids), std::move(table)));
}

MorId FactorizationCategory::find(MorId f, MorId h, MorId k) const
{
    auto it = lookup_.find(key(base_->morphism_count(), f, h, k));
    return it == lookup_.end() ? kNone : it->second;
}

MorId FactorizationCategory::precompose(MorId f, MorId h) const
{
    return find(f, h, base_->identity(base_->target(f)));
}

MorId FactorizationCategory::postcompose(MorId f, MorId k) const
{
    return find(f, base_->identity(base_->source(f)), k);
}

FactorizationPtr build_factorization(const CatPtr& c) { return std::make_shared<const FactorizationCategory>(c); }

Functor factor_functor(const Functor& phi, const FactorizationCategory& fc, const FactorizationCategory& fd)
{
    if (!same_category(phi.source(), fc.base()) || !same_category(phi.target(), fd.base()))
        throw ShapeMismatch("factor_functor: factorization categories do not match the functor");
    std::vector<ObjId> objs(fc.base()->morphism_count());
    for (MorId f = 0; f < objs.size(); ++f) objs[f] = phi.on_morphism(f);
    std::vector<MorId> mors(fc.pair_count());
    for (MorId p = 0; p < mors.size(); ++p) {
        const FPair& q = fc.pair(p);
        mors[p] = fd.find(phi.on_morphism(q.source_object), phi.on_morphism(q.h), phi.on_morphism(q.k));
    }
    return Functor(fc.category(), fd.category(), std::move(objs), std::move(mors));
}

Functor factor_nat(const NaturalTransformation& alpha, const FactorizationCategory& fd, const FactorizationCategory& fc)
{
    if (!same_category(alpha.domain(), fd.base()) || !same_category(alpha.codomain(), fc.base()))
        throw ShapeMismatch("factor_nat: factorization categories do not match the transformation");
    const FiniteCategory& d = *fd.base();
    const FiniteCategory& c = *fc.base();
    const Functor& phi = alpha.source();
    const Functor& psi = alpha.target();
    std::vector<ObjId> objs(d.morphism_count());
    for (MorId f = 0; f < objs.size(); ++f) {
        const MorId one = c.compose(alpha[d.target(f)], phi.on_morphism(f));
        const MorId two = c.compose(psi.on_morphism(f), alpha[d.source(f)]);
        if (one != two) throw NaturalityBroken("factor_nat: alpha_Y phi(f) != psi(f) alpha_X at '" + d.morphism_name(f) + "'");
        objs[f] = one;
    }
    std::vector<MorId> mors(fd.pair_count());
    for (MorId p = 0; p < mors.size(); ++p) {
        const FPair& q = fd.pair(p);
        mors[p] = fc.find(objs[q.source_object], phi.on_morphism(q.h), psi.on_morphism(q.k));
        if (mors[p] == kNone) throw NaturalityBroken("factor_nat: image of a factorization is not a factorization");
    }
    return Functor(fd.category(), fc.category(), std::move(objs), std::move(mors));
}

void check_two_cell(const TwoCell& cell)
{
    if (!(cell.epsilon.target() == cell.alpha.source()) || !(cell.gamma.source() == cell.alpha.target()) ||
        !(cell.epsilon.source() == cell.beta.source()) || !(cell.gamma.target() == cell.beta.target()))
        throw SquareNotCommuting("two-cell: boundary functors do not match");
    const FiniteCategory& c = *cell.alpha.codomain();
    for (ObjId x = 0; x < cell.alpha.components().size(); ++x)
        if (c.compose(cell.gamma[x], c.compose(cell.alpha[x], cell.epsilon[x])) != cell.beta[x])
            throw SquareNotCommuting("two-cell: gamma alpha epsilon != beta at object '" +
                                     cell.alpha.domain()->object_name(x) + "'");
}

TwoCell identity_cell(const NaturalTransformation& alpha)
{
    return {alpha, alpha, NaturalTransformation::identity(alpha.source()),
            NaturalTransformation::identity(alpha.target())};
}

TwoCell vertical_cells(const TwoCell& second, const TwoCell& first)
{
    if (!(first.beta == second.alpha)) throw ShapeMismatch("vertical_cells: cells do not stack");
    return {first.alpha, second.beta, vertical_compose(first.epsilon, second.epsilon),
            vertical_compose(second.gamma, first.gamma)};
}

TwoCell horizontal_cells(const TwoCell& outer, const TwoCell& inner)
{
    return {horizontal_compose(outer.alpha, inner.alpha), horizontal_compose(outer.beta, inner.beta),
            horizontal_compose(outer.epsilon, inner.epsilon), horizontal_compose(outer.gamma, inner.gamma)};
}

NaturalTransformation factor_two_morphism(const TwoCell& cell, const FactorizationCategory& fd,
                                          const FactorizationCategory& fc)
{
    check_two_cell(cell);
    Functor fa = factor_nat(cell.alpha, fd, fc);
    Functor fb = factor_nat(cell.beta, fd, fc);
    const FiniteCategory& d = *fd.base();
    std::vector<MorId> comps(d.morphism_count());
    for (MorId f = 0; f < comps.size(); ++f) {
        comps[f] = fc.find(fa(f), cell.epsilon[d.source(f)], cell.gamma[d.target(f)]);
        if (comps[f] == kNone) throw SquareNotCommuting("factor_two_morphism: (epsilon_X, gamma_Y) is not a factorization");
    }
    return NaturalTransformation(std::move(fa), std::move(fb), std::move(comps));
}

Functor projection_to_pair(const FactorizationCategory& fc)
{
    const FiniteCategory& c = *fc.base();
    CatPtr target = make_category(product(opposite(c), c));
    const std::size_t n = c.object_count(), m = c.morphism_count();
    std::vector<ObjId> objs(m);
    for (MorId f = 0; f < m; ++f) objs[f] = c.source(f) * n + c.target(f);
    std::vector<MorId> mors(fc.pair_count());
    for (MorId p = 0; p < mors.size(); ++p) mors[p] = fc.pair(p).h * m + fc.pair(p).k;
    return Functor(fc.category(), std::move(target), std::move(objs), std::move(mors));
}

} // namespace bwc
