#pragma once

#include <map>
#include <memory>
#include <vector>

#include "bwcohom/abelian.hpp"
#include "bwcohom/factorization.hpp"

namespace bwc {

/// D: FC -> Ab with finitely presented values.  The full action table is
/// stored, one GroupHom D(h,k): D(f) -> D(g) per morphism (h,k): f -> g of FC.
class NaturalSystem {
public:
    NaturalSystem() = default;
    NaturalSystem(FactorizationPtr fc, std::vector<GroupPtr> values, std::vector<GroupHom> actions);

    const FactorizationPtr& factorization() const noexcept { return fc_; }
    const CatPtr& base() const noexcept { return fc_->base(); }
    const GroupPtr& value(MorId f) const { return values_[f]; }
    const std::vector<GroupPtr>& values() const noexcept { return values_; }
    /// D(p) for a morphism p of FC.
    const GroupHom& action(MorId p) const { return actions_[p]; }
    const std::vector<GroupHom>& actions() const noexcept { return actions_; }
    /// D(h, k) out of D(f); throws ShapeMismatch when (h, k) does not start at f.
    const GroupHom& action(MorId f, MorId h, MorId k) const;

private:
    FactorizationPtr fc_;
    std::vector<GroupPtr> values_;
    std::vector<GroupHom> actions_;
};

using SystemPtr = std::shared_ptr<const NaturalSystem>;
SystemPtr make_system(NaturalSystem d);
bool same_system(const SystemPtr& a, const SystemPtr& b);

/// Functoriality over FC, checked on every composable pair of FPairs, plus
/// the well-definedness witness of every action and D(h,k) = D(1,k)D(h,1) = D(h,1)D(1,k).
ValidationReport validate_natural_system(const NaturalSystem& d);

/// Generator data: D(h, 1): D(f) -> D(f h) keyed by (f, h) and D(1, k): D(f) -> D(k f)
/// keyed by (f, k).  Missing identity generators default to identities.
struct SystemGenerators {
    std::vector<GroupPtr> values;
    std::map<std::pair<MorId, MorId>, GroupHom> precompose;
    std::map<std::pair<MorId, MorId>, GroupHom> postcompose;
};

/// Completes the action table by D(h, k) = D(1, k) D(h, 1).  The result is
/// not validated; call validate_natural_system.
NaturalSystem complete_from_generators(const FactorizationPtr& fc, const SystemGenerators& gens);

NaturalSystem constant_system(const FactorizationPtr& fc, const GroupPtr& g);

/// A functor B: C^op x C -> Ab.  Values are indexed by product objects
/// (X, Y) = X * |Ob C| + Y and actions by product morphisms (h, k) = h * |Mor C| + k,
/// where B(h, k): B(X, Y) -> B(X', Y') for h: X' -> X and k: Y -> Y'.
struct Bifunctor {
    CatPtr base;
    std::vector<GroupPtr> values;
    std::vector<GroupHom> actions;
};

ValidationReport validate_bifunctor(const Bifunctor& b);
/// D(f: X -> Y) = B(X, Y) and D(h, k) = B(h, k).  Throws BifunctorInvalid.
NaturalSystem from_bifunctor(const FactorizationPtr& fc, const Bifunctor& b);
/// B(X, Y) = Z[C(X, Y)] (or (Z/modulus)[C(X, Y)]), B(h, k)(u) = k u h.
Bifunctor hom_bifunctor(const CatPtr& c, const Integer& modulus = 0);

/// Z[FC(f0, f)] (or with Z/modulus coefficients), FC acting by composition.
NaturalSystem representable_system(const FactorizationPtr& fc, MorId f0, const Integer& modulus = 0);
/// Value Z/modulus (Z for 0) at every f; D(h, k) is multiplication by
/// left[h] * right[k], with left and right multiplicative sign characters.
NaturalSystem character_system(const FactorizationPtr& fc, const std::vector<int>& left, const std::vector<int>& right,
                               const Integer& modulus = 0);
NaturalSystem direct_sum(const NaturalSystem& a, const NaturalSystem& b);
/// D ⊗ Z/k: every value gets the extra relations k·e_i, actions keep their matrices.
NaturalSystem reduce_mod(const NaturalSystem& d, const Integer& k);

/// D∘G for a functor G: FD -> FC with D a system on C.
NaturalSystem pullback(const NaturalSystem& d, const Functor& g, const FactorizationPtr& fd);
/// D∘F(alpha) for alpha: phi => psi with phi, psi: D -> C.
NaturalSystem pullback_along_nat(const NaturalSystem& d, const NaturalTransformation& alpha, const FactorizationPtr& fd);

/// A 1-morphism (alpha, t): (C, D) -> (𝒟, E) of Nat_F.  alpha: phi => psi
/// with phi, psi: 𝒟 -> C, and t: D∘F(alpha) => E with components
/// t_σ: D(F(alpha)(σ)) -> E(σ) for every morphism σ of 𝒟.
class NatSysMorphism {
public:
    NatSysMorphism() = default;
    /// Checks shapes only; see validate_natsys_morphism for naturality.
    NatSysMorphism(NaturalTransformation anchor, SystemPtr source, SystemPtr target, std::vector<GroupHom> components);

    /// (1_{1_C}, 1_D)
    static NatSysMorphism identity(const SystemPtr& d);

    const NaturalTransformation& anchor() const noexcept { return anchor_; }
    const SystemPtr& source() const noexcept { return source_; }
    const SystemPtr& target() const noexcept { return target_; }
    /// F(alpha): F𝒟 -> FC
    const Functor& factored_anchor() const noexcept { return factored_; }
    const GroupHom& component(MorId sigma) const { return components_[sigma]; }
    const std::vector<GroupHom>& components() const noexcept { return components_; }

private:
    NaturalTransformation anchor_;
    SystemPtr source_;
    SystemPtr target_;
    Functor factored_;
    std::vector<GroupHom> components_;
};

/// Naturality over F𝒟: t_τ D(F(alpha)(h,k)) = E(h,k) t_σ for every (h,k): σ -> τ.
ValidationReport validate_natsys_morphism(const NatSysMorphism& t);

/// (beta, s)(alpha, t) = (alpha*beta, s (t * 1_{F(beta)})).  Throws ShapeMismatch.
NatSysMorphism compose_natsys_morphisms(const NatSysMorphism& s, const NatSysMorphism& t);
/// (alpha*beta, t * 1_{F(beta)}): (C, D) -> (ℰ, E∘F(beta)), component t_{F(beta)σ}.
NatSysMorphism whisker(const NatSysMorphism& t, const NaturalTransformation& beta, const FactorizationPtr& fe);

/// 1_D * F(epsilon, gamma): D∘F(alpha) => D∘F(beta) as a morphism over the
/// identity of the common source category, component D(epsilon_X, gamma_Y).
/// The pulled-back systems may be supplied to share them between callers.
NatSysMorphism act_by_two_morphism(const SystemPtr& d, const TwoCell& cell, const FactorizationPtr& fd,
                                   SystemPtr pulled_alpha = nullptr, SystemPtr pulled_beta = nullptr);

/// The quotient maps D(f) -> (D ⊗ Z/k)(f), as a morphism over the identity.
NatSysMorphism reduction_map(const SystemPtr& d, const SystemPtr& reduced);

/// Componentwise check that every component is an isomorphism.
bool is_natural_isomorphism(const NatSysMorphism& t);

} // namespace bwc
