#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bwcohom/integer_matrix.hpp"
#include "bwcohom/normal_forms.hpp"

namespace bwc {

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
struct GroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
    /// "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/4"
    std::string to_string() const;
    /// same without spaces, for one-line summaries
    std::string compact() const;

    friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/// Z^g / (column span of R).  Each column of R is one relation.
class PresentedGroup {
public:
    PresentedGroup() = default;
    PresentedGroup(std::size_t generators, IntMatrix relations);

    static PresentedGroup free(std::size_t rank);
    /// Z/n; n == 0 gives Z.
    static PresentedGroup cyclic(const Integer& n);
    static PresentedGroup from_invariants(const GroupInvariants& inv);

    std::size_t generators() const noexcept { return generators_; }
    std::size_t relation_count() const noexcept { return relations_.cols(); }
    const IntMatrix& relations() const noexcept { return relations_; }
    const Lattice& relation_lattice() const noexcept { return lattice_; }

    friend bool operator==(const PresentedGroup& a, const PresentedGroup& b)
    {
        return a.generators_ == b.generators_ && a.relations_ == b.relations_;
    }

private:
    friend PresentedGroup direct_product(const std::vector<const PresentedGroup*>& parts);
    PresentedGroup(std::size_t generators, IntMatrix relations, Lattice lattice)
        : generators_(generators), relations_(std::move(relations)), lattice_(std::move(lattice)) {}

    std::size_t generators_ = 0;
    IntMatrix relations_{0, 0};
    Lattice lattice_;
};

using GroupPtr = std::shared_ptr<const PresentedGroup>;

GroupPtr make_group(PresentedGroup g);
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// Homomorphism of presented groups.  `matrix` acts on generator
/// coordinates; `witness` certifies well-definedness:
///     matrix * R_source == R_target * witness.
class GroupHom {
public:
    GroupHom() = default;
    /// Checks the witness equation exactly; throws NotWellDefined.
    GroupHom(GroupPtr source, GroupPtr target, IntMatrix matrix, IntMatrix witness);

    /// Computes a witness by solving over Z; throws NotWellDefined when the
    /// matrix does not descend to the quotients.
    static GroupHom make(GroupPtr source, GroupPtr target, IntMatrix matrix);
    /// No check.  For homs assembled blockwise from checked pieces, whose
    /// witness is the same blockwise assembly.
    static GroupHom assembled(GroupPtr source, GroupPtr target, IntMatrix matrix, IntMatrix witness);

    static GroupHom identity(const GroupPtr& g);
    static GroupHom zero(const GroupPtr& source, const GroupPtr& target);
    static GroupHom scalar(const GroupPtr& g, const Integer& k);

    const GroupPtr& source() const noexcept { return source_; }
    const GroupPtr& target() const noexcept { return target_; }
    const IntMatrix& matrix() const noexcept { return matrix_; }
    const IntMatrix& witness() const noexcept { return witness_; }

    bool is_well_defined() const;

private:
    GroupPtr source_;
    GroupPtr target_;
    IntMatrix matrix_;
    IntMatrix witness_;
};

GroupInvariants group_invariants(const PresentedGroup& g);

PresentedGroup direct_product(const std::vector<const PresentedGroup*>& parts);
PresentedGroup direct_product(const std::vector<GroupPtr>& parts);

/// g o f.  Throws DimensionMismatch when target(f) != source(g).
GroupHom hom_compose(const GroupHom& g, const GroupHom& f);
GroupHom hom_add(const GroupHom& a, const GroupHom& b);
GroupHom hom_sub(const GroupHom& a, const GroupHom& b);
GroupHom hom_negate(const GroupHom& a);
GroupHom hom_scale(const GroupHom& a, const Integer& k);

/// Equality as maps of quotient groups.
bool homs_equal(const GroupHom& a, const GroupHom& b);
bool is_zero(const GroupHom& h);
/// Bijective on the quotients: trivial kernel and trivial cokernel.
bool is_iso(const GroupHom& h);
/// Two-sided inverse of an isomorphism; throws NotInvertible otherwise.
GroupHom hom_inverse(const GroupHom& h);

/// ker(d_out) / im(d_in) for  A --d_in--> B --d_out--> C, realised as a
/// presented group on a Z-basis of the cycle lattice of B.
struct Subquotient {
    IntMatrix cycle_basis;   ///< generators(B) x rank, columns span the cycle lattice
    PresentedGroup homology; ///< Z^rank / (boundaries + relations of B, in cycle coordinates)
};

/// Throws CompositionNotZero when d_out o d_in != 0 on the quotients and
/// DimensionMismatch on incompatible shapes.
Subquotient subquotient(const GroupHom& d_in, const GroupHom& d_out);
GroupInvariants subquotient_invariants(const GroupHom& d_in, const GroupHom& d_out);

/// Map induced on subquotients by p: B -> B' (p must carry cycles to cycles,
/// which holds for every component of a chain map).
GroupHom induced_on_subquotients(const GroupHom& p, const Subquotient& from, const Subquotient& to);

} // namespace bwc
