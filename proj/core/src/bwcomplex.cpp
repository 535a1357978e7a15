#include "bwcohom/bwcomplex.hpp"

#include <algorithm>
#include <limits>

namespace bwc {

CochainComplex::CochainComplex(SystemPtr system, std::size_t max_degree, bool verify) : system_(std::move(system))
{
    if (max_degree < 1) throw DegreeOutOfRange("build_complex: the maximal degree must be at least 1");
    const FiniteCategory& c = *base();
    const NaturalSystem& d = *system_;
    degrees_.resize(max_degree + 1);

    for (std::size_t n = 0; n <= max_degree; ++n) {
        Degree& deg = degrees_[n];
        const std::size_t count = count_sequences(c, n);
        if (n > 0 && count > 0) {
            long double span = 1;
            for (std::size_t i = 0; i < n; ++i) span *= static_cast<long double>(c.morphism_count());
            if (span >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
                throw DimensionMismatch("build_complex: degree " + std::to_string(n) + " is too large to index");
        }
        if (count > kSequenceWarning)
            warnings_.push_back("degree " + std::to_string(n) + " has " + std::to_string(count) + " sequences");
        deg.arrows.reserve(count * n);
        deg.heads.reserve(count);
        deg.composites.reserve(count);
        deg.gen_offset.assign(1, 0);
        deg.rel_offset.assign(1, 0);
        deg.lookup.reserve(count);
        std::vector<const PresentedGroup*> factors;
        factors.reserve(count);
        for_each_sequence(c, n, [&](const MorphismSequence& s) {
            const MorId comp = sequence_composite(c, s);
            if (n > 0) deg.lookup.emplace(key(n, s.arrows.data()), deg.heads.size());
            deg.arrows.insert(deg.arrows.end(), s.arrows.begin(), s.arrows.end());
            deg.heads.push_back(s.head);
            deg.composites.push_back(comp);
            const PresentedGroup& g = *d.value(comp);
            deg.gen_offset.push_back(deg.gen_offset.back() + g.generators());
            deg.rel_offset.push_back(deg.rel_offset.back() + g.relation_count());
            factors.push_back(&g);
        });
        deg.group = make_group(direct_product(factors));
    }

    std::vector<MorId> buf;
    for (std::size_t n = 0; n < max_degree; ++n) {
        OperatorBuilder op(*this, n, *this, n + 1);
        for (std::size_t i = 0; i < sequence_count(n + 1); ++i) {
            const MorId* a = arrows(n + 1, i);
            // D(1, σ1) c(σ2, ..., σn+1)
            const std::size_t first = n == 0 ? index_of_object(c.source(a[0])) : index_of(n, a + 1);
            const MorId u = composite(n, first);
            op.add(i, first, d.action(u, c.identity(c.source(u)), a[0]));
            // Σ (-1)^j c(..., σj σj+1, ...)
            for (std::size_t j = 1; j <= n; ++j) {
                buf.assign(a, a + n + 1);
                buf[j - 1] = c.table(a[j - 1], a[j]);
                buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(j));
                op.add_identity(i, index_of(n, buf.data()), j % 2 == 0 ? 1 : -1);
            }
            // (-1)^{n+1} D(σn+1, 1) c(σ1, ..., σn)
            const std::size_t last = n == 0 ? index_of_object(head(1, i)) : index_of(n, a);
            const MorId v = composite(n, last);
            op.add(i, last, d.action(v, a[n], c.identity(c.target(v))), (n + 1) % 2 == 0 ? 1 : -1);
        }
        differentials_.push_back(op.finish());
    }

    if (verify)
        for (std::size_t n = 0; n + 1 < max_degree; ++n) {
            const GroupHom dd = hom_compose(differentials_[n + 1], differentials_[n]);
            require_equal(dd, GroupHom::zero(group(n), group(n + 2)), "d∘d = 0", n, *this, n, *this, n + 2);
        }
}

std::uint64_t CochainComplex::key(std::size_t n, const MorId* a) const
{
    const std::uint64_t m = base()->morphism_count();
    std::uint64_t k = 0;
    for (std::size_t i = n; i-- > 0;) k = k * m + a[i];
    return k;
}

MorphismSequence CochainComplex::sequence(std::size_t n, std::size_t i) const
{
    MorphismSequence s;
    s.head = head(n, i);
    s.arrows.assign(arrows(n, i), arrows(n, i) + n);
    return s;
}

std::size_t CochainComplex::index_of(std::size_t n, const MorId* a) const
{
    if (n == 0) throw DegreeOutOfRange("index_of: use index_of_object in degree 0");
    const auto& lk = degrees_.at(n).lookup;
    auto it = lk.find(key(n, a));
    return it == lk.end() ? kNone : it->second;
}

const GroupHom& CochainComplex::differential(std::size_t n) const
{
    if (n >= differentials_.size())
        throw DegreeOutOfRange("differential d^" + std::to_string(n) + " is beyond the computed range");
    return differentials_[n];
}

std::string CochainComplex::describe_generator(std::size_t n, std::size_t g) const
{
    const Degree& deg = degrees_.at(n);
    auto it = std::upper_bound(deg.gen_offset.begin(), deg.gen_offset.end(), g);
    const std::size_t i = static_cast<std::size_t>(it - deg.gen_offset.begin()) - 1;
    const FiniteCategory& c = *base();
    std::string s = "(";
    if (n == 0) s += c.object_name(deg.heads[i]);
    for (std::size_t j = 0; j < n; ++j) {
        if (j) s += ",";
        s += c.morphism_name(deg.arrows[i * n + j]);
    }
    return s + ")[" + std::to_string(g - deg.gen_offset[i]) + "]";
}

ComplexPtr build_complex(const SystemPtr& d, std::size_t max_degree, bool verify)
{
    return std::make_shared<const CochainComplex>(d, max_degree, verify);
}

namespace {
GroupHom incoming(const CochainComplex& c, std::size_t n)
{
    if (n == 0) return GroupHom::zero(make_group(PresentedGroup::free(0)), c.group(0));
    return c.differential(n - 1);
}

void require_cohomology_degree(const CochainComplex& c, std::size_t n)
{
    if (n + 1 > c.max_degree())
        throw DegreeOutOfRange("H^" + std::to_string(n) + " needs the complex up to degree " + std::to_string(n + 1) +
                               ", computed up to " + std::to_string(c.max_degree()));
}
} // namespace

GroupInvariants cohomology(const CochainComplex& c, std::size_t n)
{
    require_cohomology_degree(c, n);
    return subquotient_invariants(incoming(c, n), c.differential(n));
}

std::vector<GroupInvariants> cohomology_all(const CochainComplex& c)
{
    std::vector<GroupInvariants> out;
    for (std::size_t n = 0; n < c.max_degree(); ++n) out.push_back(cohomology(c, n));
    return out;
}

Subquotient cohomology_subquotient(const CochainComplex& c, std::size_t n)
{
    require_cohomology_degree(c, n);
    return subquotient(incoming(c, n), c.differential(n));
}

OperatorBuilder::OperatorBuilder(const CochainComplex& source, std::size_t source_degree, const CochainComplex& target,
                                 std::size_t target_degree)
    : source_(source),
      target_(target),
      sdeg_(source_degree),
      tdeg_(target_degree),
      matrix_(target.group(target_degree)->generators(), source.group(source_degree)->generators()),
      witness_(target.group(target_degree)->relation_count(), source.group(source_degree)->relation_count())
{
}

void OperatorBuilder::add(std::size_t target_chain, std::size_t source_chain, const GroupHom& block, int sign)
{
    if (source_chain == kNone || target_chain == kNone) throw ShapeMismatch("OperatorBuilder: chain not in the basis");
    const std::size_t r0 = target_.gen_offset(tdeg_, target_chain), c0 = source_.gen_offset(sdeg_, source_chain);
    if (block.matrix().rows() != target_.gen_offset(tdeg_, target_chain + 1) - r0 ||
        block.matrix().cols() != source_.gen_offset(sdeg_, source_chain + 1) - c0)
        throw ShapeMismatch("OperatorBuilder: block does not fit between " + source_.describe_generator(sdeg_, c0) +
                            " and " + target_.describe_generator(tdeg_, r0));
    matrix_.add_block(r0, c0, block.matrix(), sign);
    witness_.add_block(target_.rel_offset(tdeg_, target_chain), source_.rel_offset(sdeg_, source_chain), block.witness(),
                       sign);
}

void OperatorBuilder::add_identity(std::size_t target_chain, std::size_t source_chain, int sign)
{
    if (source_chain == kNone || target_chain == kNone) throw ShapeMismatch("OperatorBuilder: chain not in the basis");
    const std::size_t r0 = target_.gen_offset(tdeg_, target_chain), c0 = source_.gen_offset(sdeg_, source_chain);
    const std::size_t g = target_.gen_offset(tdeg_, target_chain + 1) - r0;
    for (std::size_t k = 0; k < g; ++k) matrix_(r0 + k, c0 + k) += sign;
    const std::size_t q0 = target_.rel_offset(tdeg_, target_chain), s0 = source_.rel_offset(sdeg_, source_chain);
    const std::size_t rels = target_.rel_offset(tdeg_, target_chain + 1) - q0;
    for (std::size_t k = 0; k < rels; ++k) witness_(q0 + k, s0 + k) += sign;
}

GroupHom OperatorBuilder::finish()
{
    return GroupHom::assembled(source_.group(sdeg_), target_.group(tdeg_), std::move(matrix_), std::move(witness_));
}

GradedMap::GradedMap(ComplexPtr source, ComplexPtr target, int shift)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift)
{
    if (source_->max_degree() != target_->max_degree())
        throw ShapeMismatch("GradedMap: complexes are truncated at different degrees");
    components_.resize(source_->max_degree() + 1);
}

bool GradedMap::has(std::size_t k) const
{
    const long t = static_cast<long>(k) + shift_;
    return k <= source_->max_degree() && t >= 0 && t <= static_cast<long>(target_->max_degree());
}

const GroupHom& GradedMap::at(std::size_t k) const
{
    if (!has(k) || !components_[k].source())
        throw DegreeOutOfRange("graded map has no component in degree " + std::to_string(k));
    return components_[k];
}

void GradedMap::set(std::size_t k, GroupHom h)
{
    if (!has(k)) throw DegreeOutOfRange("graded map cannot have a component in degree " + std::to_string(k));
    const std::size_t t = static_cast<std::size_t>(static_cast<long>(k) + shift_);
    if (!same_group(h.source(), source_->group(k)) || !same_group(h.target(), target_->group(t)))
        throw ShapeMismatch("graded map component in degree " + std::to_string(k) + " has the wrong groups");
    components_[k] = std::move(h);
}

GradedMap graded_zero(const ComplexPtr& source, const ComplexPtr& target, int shift)
{
    GradedMap z(source, target, shift);
    for (std::size_t k = 0; k <= source->max_degree(); ++k)
        if (z.has(k))
            z.set(k, GroupHom::zero(source->group(k), target->group(static_cast<std::size_t>(static_cast<long>(k) + shift))));
    return z;
}

GradedMap graded_identity(const ComplexPtr& c)
{
    GradedMap id(c, c, 0);
    for (std::size_t k = 0; k <= c->max_degree(); ++k) id.set(k, GroupHom::identity(c->group(k)));
    return id;
}

namespace {
template <class Op>
GradedMap combine(const GradedMap& a, const GradedMap& b, Op op)
{
    if (a.shift() != b.shift()) throw ShapeMismatch("graded maps of different degrees");
    GradedMap out(a.source(), a.target(), a.shift());
    for (std::size_t k = 0; k <= a.max_degree(); ++k)
        if (a.has(k)) out.set(k, op(a.at(k), b.at(k)));
    return out;
}
} // namespace

GradedMap graded_add(const GradedMap& a, const GradedMap& b) { return combine(a, b, hom_add); }
GradedMap graded_sub(const GradedMap& a, const GradedMap& b) { return combine(a, b, hom_sub); }

GradedMap graded_negate(const GradedMap& a)
{
    GradedMap out(a.source(), a.target(), a.shift());
    for (std::size_t k = 0; k <= a.max_degree(); ++k)
        if (a.has(k)) out.set(k, hom_negate(a.at(k)));
    return out;
}

GradedMap graded_compose(const GradedMap& g, const GradedMap& f)
{
    GradedMap out(f.source(), g.target(), f.shift() + g.shift());
    for (std::size_t k = 0; k <= f.max_degree(); ++k) {
        if (!f.has(k)) continue;
        const std::size_t mid = static_cast<std::size_t>(static_cast<long>(k) + f.shift());
        if (g.has(mid)) out.set(k, hom_compose(g.at(mid), f.at(k)));
    }
    return out;
}

void require_equal(const GroupHom& lhs, const GroupHom& rhs, const std::string& what, std::size_t degree,
                   const CochainComplex& source, std::size_t source_degree, const CochainComplex& target,
                   std::size_t target_degree)
{
    auto bad = target.group(target_degree)->relation_lattice().first_outside_difference(lhs.matrix(), rhs.matrix());
    if (!bad) return;
    throw IdentityViolation(what + " fails", static_cast<int>(degree),
                            "row " + target.describe_generator(target_degree, bad->first) + ", column " +
                                source.describe_generator(source_degree, bad->second));
}

void check_chain_map(const GradedMap& p, const std::string& what)
{
    const CochainComplex& a = *p.source();
    const CochainComplex& b = *p.target();
    for (std::size_t k = 0; k < a.max_degree(); ++k)
        require_equal(hom_compose(b.differential(k), p.at(k)), hom_compose(p.at(k + 1), a.differential(k)),
                      what + ": d p = p d", k, a, k, b, k + 1);
}

void check_homotopy(const GradedMap& h, const GradedMap& p, const GradedMap& q, const std::string& what)
{
    const CochainComplex& a = *h.source();
    const CochainComplex& b = *h.target();
    for (std::size_t k = 0; k < a.max_degree(); ++k) {
        GroupHom lhs = hom_compose(h.at(k + 1), a.differential(k));
        if (k >= 1) lhs = hom_add(lhs, hom_compose(b.differential(k - 1), h.at(k)));
        require_equal(lhs, hom_sub(q.at(k), p.at(k)), what, k, a, k, b, k);
    }
}

void check_second_homotopy(const GradedMap& r, const GradedMap& rhs, const std::string& what)
{
    const CochainComplex& a = *r.source();
    const CochainComplex& b = *r.target();
    for (std::size_t k = 1; k < a.max_degree(); ++k) {
        GroupHom lhs = hom_negate(hom_compose(r.at(k + 1), a.differential(k)));
        if (k >= 2) lhs = hom_add(lhs, hom_compose(b.differential(k - 2), r.at(k)));
        require_equal(lhs, rhs.at(k), what, k, a, k, b, k - 1);
    }
}

GroupHom induced_on_cohomology(const GradedMap& p, std::size_t n, const Subquotient& source, const Subquotient& target)
{
    if (p.shift() != 0) throw ShapeMismatch("induced_on_cohomology: not a degree-0 map");
    return induced_on_subquotients(p.at(n), source, target);
}

} // namespace bwc
