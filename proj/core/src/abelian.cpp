#include "bwcohom/abelian.hpp"

#include <sstream>

#include "bwcohom/errors.hpp"

namespace bwc {

std::string GroupInvariants::to_string() const
{
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << '^' << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " ⊕ ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

std::string GroupInvariants::compact() const
{
    std::string s = to_string();
    std::string out;
    for (char c : s)
        if (c != ' ') out += c;
    return out;
}

PresentedGroup::PresentedGroup(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations))
{
    if (relations_.cols() == 0 && relations_.rows() == 0) relations_ = IntMatrix(generators_, 0);
    if (relations_.rows() != generators_)
        throw DimensionMismatch("PresentedGroup: relation matrix has " + std::to_string(relations_.rows()) +
                                " rows for " + std::to_string(generators_) + " generators");
    lattice_ = Lattice::spanned_by(relations_);
}

PresentedGroup PresentedGroup::free(std::size_t rank) { return PresentedGroup(rank, IntMatrix(rank, 0)); }

PresentedGroup PresentedGroup::cyclic(const Integer& n)
{
    if (sgn(n) == 0) return free(1);
    return PresentedGroup(1, IntMatrix(1, 1, std::vector<Integer>{Integer(abs(n))}));
}

PresentedGroup PresentedGroup::from_invariants(const GroupInvariants& inv)
{
    const std::size_t g = inv.free_rank + inv.torsion.size();
    IntMatrix r(g, inv.torsion.size());
    for (std::size_t k = 0; k < inv.torsion.size(); ++k) r(inv.free_rank + k, k) = inv.torsion[k];
    return PresentedGroup(g, std::move(r));
}

GroupPtr make_group(PresentedGroup g) { return std::make_shared<const PresentedGroup>(std::move(g)); }

bool same_group(const GroupPtr& a, const GroupPtr& b)
{
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, IntMatrix matrix, IntMatrix witness)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)), witness_(std::move(witness))
{
    if (matrix_.rows() != target_->generators() || matrix_.cols() != source_->generators())
        throw DimensionMismatch("GroupHom: matrix shape does not match generator counts");
    if (witness_.rows() != target_->relation_count() || witness_.cols() != source_->relation_count())
        throw DimensionMismatch("GroupHom: witness shape does not match relation counts");
    if (!is_well_defined()) throw NotWellDefined("GroupHom: matrix * R_source != R_target * witness");
}

GroupHom GroupHom::make(GroupPtr source, GroupPtr target, IntMatrix matrix)
{
    if (matrix.rows() != target->generators() || matrix.cols() != source->generators())
        throw DimensionMismatch("GroupHom: matrix is " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + ", expected " + std::to_string(target->generators()) +
                                "x" + std::to_string(source->generators()));
    IntMatrix image = matrix * source->relations();
    IntMatrix witness(target->relation_count(), source->relation_count());
    if (!image.is_zero()) {
        auto q = solve_integer(target->relations(), image);
        if (!q) throw NotWellDefined("GroupHom: a relation of the source is not sent into the target relations");
        witness = std::move(*q);
    }
    return assembled(std::move(source), std::move(target), std::move(matrix), std::move(witness));
}

GroupHom GroupHom::assembled(GroupPtr source, GroupPtr target, IntMatrix matrix, IntMatrix witness)
{
    GroupHom h;
    h.source_ = std::move(source);
    h.target_ = std::move(target);
    h.matrix_ = std::move(matrix);
    h.witness_ = std::move(witness);
    return h;
}

GroupHom GroupHom::identity(const GroupPtr& g)
{
    return assembled(g, g, IntMatrix::identity(g->generators()), IntMatrix::identity(g->relation_count()));
}

GroupHom GroupHom::zero(const GroupPtr& source, const GroupPtr& target)
{
    return assembled(source, target, IntMatrix(target->generators(), source->generators()),
                     IntMatrix(target->relation_count(), source->relation_count()));
}

GroupHom GroupHom::scalar(const GroupPtr& g, const Integer& k)
{
    return assembled(g, g, IntMatrix::scalar(g->generators(), k), IntMatrix::scalar(g->relation_count(), k));
}

bool GroupHom::is_well_defined() const
{
    return matrix_ * source_->relations() == target_->relations() * witness_;
}

GroupInvariants group_invariants(const PresentedGroup& g)
{
    GroupInvariants inv;
    std::vector<Integer> d = smith_diagonal(g.relations());
    inv.free_rank = g.generators() - d.size();
    for (auto& x : d)
        if (x != 1) inv.torsion.push_back(std::move(x));
    return inv;
}

PresentedGroup direct_product(const std::vector<const PresentedGroup*>& parts)
{
    std::size_t g = 0;
    std::vector<const IntMatrix*> rel;
    std::vector<const Lattice*> lat;
    for (const auto* p : parts) {
        g += p->generators();
        rel.push_back(&p->relations());
        lat.push_back(&p->relation_lattice());
    }
    return PresentedGroup(g, IntMatrix::block_diagonal(rel), Lattice::direct_sum(lat));
}

PresentedGroup direct_product(const std::vector<GroupPtr>& parts)
{
    std::vector<const PresentedGroup*> raw;
    raw.reserve(parts.size());
    for (const auto& p : parts) raw.push_back(p.get());
    return direct_product(raw);
}

GroupHom hom_compose(const GroupHom& g, const GroupHom& f)
{
    if (!same_group(f.target(), g.source())) throw DimensionMismatch("hom_compose: target(f) != source(g)");
    return GroupHom::assembled(f.source(), g.target(), g.matrix() * f.matrix(), g.witness() * f.witness());
}

namespace {
void require_parallel(const GroupHom& a, const GroupHom& b, const char* op)
{
    if (!same_group(a.source(), b.source()) || !same_group(a.target(), b.target()))
        throw DimensionMismatch(std::string(op) + ": homomorphisms are not parallel");
}
} // namespace

GroupHom hom_add(const GroupHom& a, const GroupHom& b)
{
    require_parallel(a, b, "hom_add");
    return GroupHom::assembled(a.source(), a.target(), a.matrix() + b.matrix(), a.witness() + b.witness());
}

GroupHom hom_sub(const GroupHom& a, const GroupHom& b)
{
    require_parallel(a, b, "hom_sub");
    return GroupHom::assembled(a.source(), a.target(), a.matrix() - b.matrix(), a.witness() - b.witness());
}

GroupHom hom_negate(const GroupHom& a)
{
    return GroupHom::assembled(a.source(), a.target(), -a.matrix(), -a.witness());
}

GroupHom hom_scale(const GroupHom& a, const Integer& k)
{
    return GroupHom::assembled(a.source(), a.target(), k * a.matrix(), k * a.witness());
}

bool homs_equal(const GroupHom& a, const GroupHom& b)
{
    require_parallel(a, b, "homs_equal");
    return !a.target()->relation_lattice().first_outside_difference(a.matrix(), b.matrix());
}

bool is_zero(const GroupHom& h) { return h.target()->relation_lattice().contains_columns(h.matrix()); }

namespace {

// Generators (as columns) of {x in Z^a : M x lies in the relation lattice of the target}.
IntMatrix preimage_of_relations(const GroupHom& h)
{
    if (h.target()->relation_count() == 0) return integer_kernel(h.matrix());
    IntMatrix full = integer_kernel(IntMatrix::hstack(h.matrix(), h.target()->relations()));
    return full.block(0, 0, h.source()->generators(), full.cols());
}

bool spans_everything(const IntMatrix& gens)
{
    const std::size_t n = gens.rows();
    if (n == 0) return true;
    HermiteForm hf = hermite_normal_form(gens, false);
    if (hf.rank != n) return false;
    for (std::size_t k = 0; k < n; ++k)
        if (hf.H(hf.pivot_rows[k], k) != 1) return false;
    return true;
}

} // namespace

bool is_iso(const GroupHom& h)
{
    if (!spans_everything(IntMatrix::hstack(h.matrix(), h.target()->relations()))) return false;
    return h.source()->relation_lattice().contains_columns(preimage_of_relations(h));
}

GroupHom hom_inverse(const GroupHom& h)
{
    if (!is_iso(h)) throw NotInvertible("hom_inverse: homomorphism is not an isomorphism");
    const std::size_t a = h.source()->generators();
    const std::size_t b = h.target()->generators();
    auto sol = solve_integer(IntMatrix::hstack(h.matrix(), h.target()->relations()), IntMatrix::identity(b));
    if (!sol) throw NotInvertible("hom_inverse: no integral section");
    return GroupHom::make(h.target(), h.source(), sol->block(0, 0, a, b));
}

Subquotient subquotient(const GroupHom& d_in, const GroupHom& d_out)
{
    if (!same_group(d_in.target(), d_out.source()))
        throw DimensionMismatch("subquotient: target of d_in differs from source of d_out");
    if (!is_zero(hom_compose(d_out, d_in))) throw CompositionNotZero("subquotient: d_out o d_in != 0");

    const PresentedGroup& mid = *d_out.source();
    Lattice cycles = Lattice::spanned_by(preimage_of_relations(d_out));
    IntMatrix basis = cycles.basis();
    IntMatrix bounds = IntMatrix::hstack(d_in.matrix(), mid.relations());
    IntMatrix coords(basis.cols(), bounds.cols());
    if (bounds.cols() > 0 && basis.cols() > 0) {
        auto sol = solve_integer(basis, bounds);
        if (!sol) throw CompositionNotZero("subquotient: boundaries do not lie in the cycle lattice");
        coords = std::move(*sol);
    }
    return {std::move(basis), PresentedGroup(coords.rows(), std::move(coords))};
}

GroupInvariants subquotient_invariants(const GroupHom& d_in, const GroupHom& d_out)
{
    return group_invariants(subquotient(d_in, d_out).homology);
}

GroupHom induced_on_subquotients(const GroupHom& p, const Subquotient& from, const Subquotient& to)
{
    if (p.matrix().cols() != from.cycle_basis.rows() || p.matrix().rows() != to.cycle_basis.rows())
        throw DimensionMismatch("induced_on_subquotients: shape mismatch");
    IntMatrix image = p.matrix() * from.cycle_basis;
    IntMatrix x(to.cycle_basis.cols(), from.cycle_basis.cols());
    if (!image.is_zero()) {
        auto sol = solve_integer(to.cycle_basis, image);
        if (!sol) throw ShapeMismatch("induced_on_subquotients: map does not carry cycles to cycles");
        x = std::move(*sol);
    }
    return GroupHom::make(make_group(from.homology), make_group(to.homology), std::move(x));
}

} // namespace bwc
