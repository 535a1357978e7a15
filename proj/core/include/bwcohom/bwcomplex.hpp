#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bwcohom/abelian.hpp"
#include "bwcohom/natsys.hpp"

namespace bwc {

/// Sequences per degree above which construction records a warning.
inline constexpr std::size_t kSequenceWarning = 100000;

/// F*(C, D) truncated at degree N: groups F^0..F^N and differentials
/// d^0..d^{N-1}.  F^n is the product of D(σ1⋯σn) over all composable chains
/// •←σ1⋯←σn• in the order of enumerate_sequences, each factor contributing a
/// contiguous block of generators and relations.
class CochainComplex {
public:
    /// Builds groups and differentials.  With `verify`, d∘d = 0 is checked
    /// and a violation throws IdentityViolation.
    CochainComplex(SystemPtr system, std::size_t max_degree, bool verify = true);

    const SystemPtr& system() const noexcept { return system_; }
    const CatPtr& base() const noexcept { return system_->base(); }
    std::size_t max_degree() const noexcept { return degrees_.size() - 1; }

    std::size_t sequence_count(std::size_t n) const { return degrees_.at(n).heads.size(); }
    const MorId* arrows(std::size_t n, std::size_t i) const { return degrees_[n].arrows.data() + i * n; }
    ObjId head(std::size_t n, std::size_t i) const { return degrees_[n].heads[i]; }
    MorId composite(std::size_t n, std::size_t i) const { return degrees_[n].composites[i]; }
    MorphismSequence sequence(std::size_t n, std::size_t i) const;

    /// Index of the chain with the given arrows (n >= 1), or kNone.
    std::size_t index_of(std::size_t n, const MorId* arrows) const;
    /// Index of the length-0 chain at x.
    std::size_t index_of_object(ObjId x) const { return x; }

    std::size_t gen_offset(std::size_t n, std::size_t i) const { return degrees_[n].gen_offset[i]; }
    std::size_t rel_offset(std::size_t n, std::size_t i) const { return degrees_[n].rel_offset[i]; }
    const GroupPtr& group(std::size_t n) const { return degrees_.at(n).group; }
    /// d^n: F^n -> F^{n+1}, 0 <= n < N.
    const GroupHom& differential(std::size_t n) const;

    /// "(f,g)[1]": the chain and component owning generator `g` of F^n.
    std::string describe_generator(std::size_t n, std::size_t g) const;
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    struct Degree {
        std::vector<MorId> arrows; // stride n
        std::vector<ObjId> heads;
        std::vector<MorId> composites;
        std::vector<std::size_t> gen_offset; // size + 1
        std::vector<std::size_t> rel_offset; // size + 1
        std::unordered_map<std::uint64_t, std::size_t> lookup;
        GroupPtr group;
    };
    std::uint64_t key(std::size_t n, const MorId* arrows) const;

    SystemPtr system_;
    std::vector<Degree> degrees_;
    std::vector<GroupHom> differentials_;
    std::vector<std::string> warnings_;
};

using ComplexPtr = std::shared_ptr<const CochainComplex>;
ComplexPtr build_complex(const SystemPtr& d, std::size_t max_degree, bool verify = true);

/// Invariants of H^n, 0 <= n <= N-1.  Throws DegreeOutOfRange.
GroupInvariants cohomology(const CochainComplex& c, std::size_t n);
/// H^0 .. H^{N-1}
std::vector<GroupInvariants> cohomology_all(const CochainComplex& c);
/// ker d^n / im d^{n-1} with its cycle basis, for maps induced on cohomology.
Subquotient cohomology_subquotient(const CochainComplex& c, std::size_t n);

/// Accumulates blocks of a GroupHom F^k(source) -> F^l(target), one
/// (target chain, source chain) block at a time.  The witness is assembled
/// from the block witnesses, so blocks must be well defined themselves.
class OperatorBuilder {
public:
    OperatorBuilder(const CochainComplex& source, std::size_t source_degree, const CochainComplex& target,
                    std::size_t target_degree);
    void add(std::size_t target_chain, std::size_t source_chain, const GroupHom& block, int sign = 1);
    void add_identity(std::size_t target_chain, std::size_t source_chain, int sign = 1);
    GroupHom finish();

private:
    const CochainComplex& source_;
    const CochainComplex& target_;
    std::size_t sdeg_;
    std::size_t tdeg_;
    IntMatrix matrix_;
    IntMatrix witness_;
};

/// A family of homs A^k -> B^{k+shift}, defined for every k with both
/// degrees inside [0, N].  Chain maps have shift 0, homotopies -1 and -2.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(ComplexPtr source, ComplexPtr target, int shift);

    const ComplexPtr& source() const noexcept { return source_; }
    const ComplexPtr& target() const noexcept { return target_; }
    int shift() const noexcept { return shift_; }
    std::size_t max_degree() const noexcept { return source_->max_degree(); }

    /// Whether degree k has a component (k + shift must be a degree of the target).
    bool has(std::size_t k) const;
    const GroupHom& at(std::size_t k) const;
    void set(std::size_t k, GroupHom h);

private:
    ComplexPtr source_;
    ComplexPtr target_;
    int shift_ = 0;
    std::vector<GroupHom> components_;
};

GradedMap graded_zero(const ComplexPtr& source, const ComplexPtr& target, int shift);
GradedMap graded_identity(const ComplexPtr& c);
GradedMap graded_add(const GradedMap& a, const GradedMap& b);
GradedMap graded_sub(const GradedMap& a, const GradedMap& b);
GradedMap graded_negate(const GradedMap& a);
/// g∘f, defined in each degree where both components exist.
GradedMap graded_compose(const GradedMap& g, const GradedMap& f);

/// Throws IdentityViolation (with degree and coordinate) unless lhs == rhs as
/// maps of presented groups.  `degree` is the source degree reported.
void require_equal(const GroupHom& lhs, const GroupHom& rhs, const std::string& what, std::size_t degree,
                   const CochainComplex& source, std::size_t source_degree, const CochainComplex& target,
                   std::size_t target_degree);

/// d p = p d in degrees 0..N-1.
void check_chain_map(const GradedMap& p, const std::string& what = "chain map");
/// d h + h d = -p + q on A^k for k = 0..N-1.
void check_homotopy(const GradedMap& h, const GradedMap& p, const GradedMap& q, const std::string& what = "dh+hd");
/// d r - r d = rhs on A^k for k = 1..N-1, rhs of degree -1.
void check_second_homotopy(const GradedMap& r, const GradedMap& rhs, const std::string& what = "dr-rd");

/// H^n(p) for a chain map p, 0 <= n <= N-1, in the cycle coordinates of the
/// two cohomology subquotients.
GroupHom induced_on_cohomology(const GradedMap& p, std::size_t n, const Subquotient& source, const Subquotient& target);

} // namespace bwc
