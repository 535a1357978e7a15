#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bwcohom/errors.hpp"

namespace bwc {

using ObjId = std::size_t;
using MorId = std::size_t;
inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// A finite category given by total tables.  Morphism and object ids are
/// dense.  `compose(g, f)` is g after f and is defined iff target(f) == source(g).
class FiniteCategory {
public:
    struct Morphism {
        std::string name;
        ObjId source = 0;
        ObjId target = 0;
    };

    FiniteCategory() = default;
    /// `composition[g * morphism_count + f]` holds g∘f for composable pairs
    /// and kNone elsewhere.  Only sizes are checked here; see validate_category.
    FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms, std::vector<MorId> identities,
                   std::vector<MorId> composition);

    /// Table given as (f, g, gf) triples.  Pairs involving an identity may be
    /// omitted; they are filled in by the identity law.
    static FiniteCategory from_triples(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                                       std::vector<MorId> identities,
                                       const std::vector<std::array<MorId, 3>>& triples);

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t morphism_count() const noexcept { return morphisms_.size(); }

    const std::string& object_name(ObjId x) const { return objects_.at(x); }
    const std::string& morphism_name(MorId f) const { return morphisms_.at(f).name; }
    const std::vector<std::string>& object_names() const noexcept { return objects_; }
    ObjId source(MorId f) const { return morphisms_[f].source; }
    ObjId target(MorId f) const { return morphisms_[f].target; }
    MorId identity(ObjId x) const { return identities_[x]; }
    bool is_identity(MorId f) const { return identities_[morphisms_[f].source] == f; }

    /// g∘f; throws NotComposable.
    MorId compose(MorId g, MorId f) const;
    /// Raw table entry, kNone when undefined.  No checks.
    MorId table(MorId g, MorId f) const noexcept { return composition_[g * morphisms_.size() + f]; }

    /// Morphisms x -> y in increasing id order.
    const std::vector<MorId>& hom(ObjId x, ObjId y) const { return homs_[x * objects_.size() + y]; }
    /// Morphisms with the given target, in increasing id order.
    const std::vector<MorId>& into(ObjId y) const { return into_[y]; }

    /// Inverse of f if f is an isomorphism.
    MorId inverse(MorId f) const;
    bool is_iso(MorId f) const { return inverse(f) != kNone; }

    std::optional<ObjId> find_object(const std::string& name) const;
    std::optional<MorId> find_morphism(const std::string& name) const;

    friend bool operator==(const FiniteCategory& a, const FiniteCategory& b)
    {
        return a.objects_ == b.objects_ && a.identities_ == b.identities_ && a.composition_ == b.composition_ &&
               a.same_morphisms(b);
    }

private:
    bool same_morphisms(const FiniteCategory& o) const;

    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<MorId> identities_;
    std::vector<MorId> composition_;
    std::vector<std::vector<MorId>> homs_;
    std::vector<std::vector<MorId>> into_;
};

using CatPtr = std::shared_ptr<const FiniteCategory>;
CatPtr make_category(FiniteCategory c);
bool same_category(const CatPtr& a, const CatPtr& b);

ValidationReport validate_category(const FiniteCategory& c);

class Functor {
public:
    Functor() = default;
    Functor(CatPtr source, CatPtr target, std::vector<ObjId> objects, std::vector<MorId> morphisms);

    static Functor identity(const CatPtr& c);
    static Functor constant(const CatPtr& source, const CatPtr& target, ObjId value);

    const CatPtr& source() const noexcept { return source_; }
    const CatPtr& target() const noexcept { return target_; }
    ObjId operator()(ObjId x) const { return objects_[x]; }
    MorId on_morphism(MorId f) const { return morphisms_[f]; }
    const std::vector<ObjId>& object_map() const noexcept { return objects_; }
    const std::vector<MorId>& morphism_map() const noexcept { return morphisms_; }

    friend bool operator==(const Functor& a, const Functor& b)
    {
        return same_category(a.source_, b.source_) && same_category(a.target_, b.target_) &&
               a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_;
    }

private:
    CatPtr source_;
    CatPtr target_;
    std::vector<ObjId> objects_;
    std::vector<MorId> morphisms_;
};

ValidationReport validate_functor(const Functor& f);
/// g∘f; throws ShapeMismatch.
Functor compose(const Functor& g, const Functor& f);

/// alpha: phi => psi with components alpha_X: phi(X) -> psi(X).
class NaturalTransformation {
public:
    NaturalTransformation() = default;
    NaturalTransformation(Functor source, Functor target, std::vector<MorId> components);

    static NaturalTransformation identity(const Functor& f);

    const Functor& source() const noexcept { return source_; }
    const Functor& target() const noexcept { return target_; }
    MorId operator[](ObjId x) const { return components_[x]; }
    const std::vector<MorId>& components() const noexcept { return components_; }
    /// Source category of the functors.
    const CatPtr& domain() const noexcept { return source_.source(); }
    /// Target category of the functors.
    const CatPtr& codomain() const noexcept { return source_.target(); }

    friend bool operator==(const NaturalTransformation& a, const NaturalTransformation& b)
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
    }

private:
    Functor source_;
    Functor target_;
    std::vector<MorId> components_;
};

ValidationReport validate_natural_transformation(const NaturalTransformation& a);

/// (beta alpha)_X = beta_X ∘ alpha_X.  Throws ShapeMismatch.
NaturalTransformation vertical_compose(const NaturalTransformation& beta, const NaturalTransformation& alpha);
/// For alpha: phi => psi (C -> D) and beta: xi => zeta (D -> E), beta*alpha: xi phi => zeta psi with
/// component beta_{psi X} ∘ xi(alpha_X).  The other formula zeta(alpha_X) ∘ beta_{phi X} is
/// evaluated too; disagreement throws NaturalityBroken.
NaturalTransformation horizontal_compose(const NaturalTransformation& beta, const NaturalTransformation& alpha);
/// 1_xi * alpha
NaturalTransformation whisker_left(const Functor& xi, const NaturalTransformation& alpha);
/// beta * 1_phi
NaturalTransformation whisker_right(const NaturalTransformation& beta, const Functor& phi);

/// •←σ1←σ2⋯←σn•.  `head` is X0 = target(σ1), or the object itself when n = 0.
struct MorphismSequence {
    ObjId head = 0;
    std::vector<MorId> arrows;

    std::size_t length() const noexcept { return arrows.size(); }
    friend bool operator==(const MorphismSequence&, const MorphismSequence&) = default;
};

/// X_i: X_0 = target(σ1), X_i = source(σi).
ObjId sequence_object(const FiniteCategory& c, const MorphismSequence& s, std::size_t i);
/// σ1⋯σn, or 1_X for the empty sequence at X.
MorId sequence_composite(const FiniteCategory& c, const MorphismSequence& s);

/// All composable chains of length n in lexicographic order of morphism ids.
std::vector<MorphismSequence> enumerate_sequences(const FiniteCategory& c, std::size_t n);
/// Visits the chains of length n in the same order without materialising them.
void for_each_sequence(const FiniteCategory& c, std::size_t n, const std::function<void(const MorphismSequence&)>& fn);
std::size_t count_sequences(const FiniteCategory& c, std::size_t n);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<ObjId>> pi0(const FiniteCategory& c);

FiniteCategory opposite(const FiniteCategory& c);
/// Objects (x, y) have id x * |Ob d| + y; morphisms (f, g) have id f * |Mor d| + g.
FiniteCategory product(const FiniteCategory& c, const FiniteCategory& d);
FiniteCategory disjoint_union(const FiniteCategory& c, const FiniteCategory& d);

FiniteCategory terminal_category();
FiniteCategory discrete_category(std::size_t n);
/// n objects, exactly one morphism between any two.
FiniteCategory indiscrete_category(std::size_t n);
/// x --f--> y; morphism ids 0 = 1_x, 1 = 1_y, 2 = f.
FiniteCategory arrow_category();
/// Poset on {0..n-1}; `leq[i * n + j]` means i <= j.  The relation must be a
/// partial order.  Morphisms are the pairs i <= j in lexicographic order.
FiniteCategory poset_category(std::size_t n, const std::vector<bool>& leq, std::vector<std::string> names = {});
/// One-object category of Z/n; morphism id k is g^k.
FiniteCategory cyclic_group_category(std::size_t n);
/// One-object category of a finite monoid with the given multiplication table
/// (`mult[a * size + b]` = a·b, i.e. a after b) and identity element `unit`.
FiniteCategory monoid_category(std::size_t size, const std::vector<std::size_t>& mult, std::size_t unit,
                               std::vector<std::string> names = {});

/// Every functor c -> d, in lexicographic order of (object map, morphism map).
std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d, std::size_t limit = kNone);
/// Every natural transformation phi => psi, in lexicographic order of components.
std::vector<NaturalTransformation> enumerate_natural_transformations(const Functor& phi, const Functor& psi,
                                                                     std::size_t limit = kNone);

} // namespace bwc
