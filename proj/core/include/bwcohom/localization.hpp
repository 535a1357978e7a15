#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bwcohom/homotopy.hpp"

namespace bwc {

/// phi: C -> 𝒟 left adjoint to psi: 𝒟 -> C with phi psi = 1 and identity
/// counit; `alpha`: 1_C => psi phi is the unit.
struct Localization {
    CatPtr big;
    CatPtr small;
    Functor phi;
    Functor psi;
    NaturalTransformation alpha;
};

/// phi right adjoint to psi with phi psi = 1 and identity unit; `alpha`:
/// psi phi => 1_C is the counit.
struct Colocalization {
    CatPtr big;
    CatPtr small;
    Functor phi;
    Functor psi;
    NaturalTransformation alpha;
};

/// Functors, naturality of alpha, phi psi = 1 and the triangle identities
/// phi(alpha_X) = 1, alpha_{psi Y} = 1.
ValidationReport validate_localization(const Localization& l);
ValidationReport validate_colocalization(const Colocalization& l);

/// Morphisms f of C with phi(f) invertible, in id order.
std::vector<MorId> inverted_morphisms(const Localization& l);
std::vector<MorId> inverted_morphisms(const Colocalization& l);

/// The first morphism g with phi(g) invertible such that D(1, g): D(f) -> D(gf)
/// (colocal: D(g, 1): D(f) -> D(fg)) is not invertible for some f, if any.
/// Testing only f = 1 is not enough for the theorem below.
std::optional<MorId> locality_witness(const NaturalSystem& d, const Localization& l);
std::optional<MorId> colocality_witness(const NaturalSystem& d, const Colocalization& l);
inline bool is_local(const NaturalSystem& d, const Localization& l) { return !locality_witness(d, l); }
inline bool is_colocal(const NaturalSystem& d, const Colocalization& l) { return !colocality_witness(d, l); }

/// 1_D * F(1, alpha): D => D F(alpha), components D(1_X, alpha_Y), as a
/// 1-morphism (1_{1_C}, u): (C, D) -> (C, D F(alpha)).  Colocal dual:
/// 1_D * F(alpha, 1), components D(alpha_X, 1_Y).
NatSysMorphism canonical_comparison(const SystemPtr& d, const Localization& l, const SystemPtr& pulled = nullptr);
NatSysMorphism canonical_comparison(const SystemPtr& d, const Colocalization& l, const SystemPtr& pulled = nullptr);

/// Conditions of the local characterization, each decided on its own:
/// (1) locality, (3) the canonical comparison is a natural isomorphism.
/// Condition (2) is only witnessed (by E = D) when (3) holds.
/// `at_identities` is (1) tested on identities f = 1_X only.
struct Characterization {
    bool condition1 = false;
    bool condition3 = false;
    std::optional<bool> condition2;
    std::optional<MorId> witness; ///< failing g for (1)
    bool at_identities = false;
    bool agree() const noexcept { return condition1 == condition3; }
};
Characterization local_characterization(const SystemPtr& d, const Localization& l);
Characterization colocal_characterization(const SystemPtr& d, const Colocalization& l);

struct Certificate {
    std::string name;
    std::vector<std::string> steps; ///< what was checked, in order
};

/// Result of the constructive verification that psi induces isomorphisms
/// H^n(C, D) -> H^n(𝒟, D F(psi)) for n < N.
struct TheoremReport {
    std::vector<GroupInvariants> big;
    std::vector<GroupInvariants> small;
    std::vector<Certificate> certificates;
};

/// Certificates, all of which must pass:
///  (a) the invariants of both sides agree degreewise;
///  (b) P = F*(1_psi, 1) and Q = F*(1_phi, u^{-1} D(alpha_X, 1)) induce
///      mutually inverse maps on H^0..H^{N-1};
///  (c) with D' = D F(alpha), P' = F*(1_psi, 1) and Q' = F*(1_phi, D(alpha_X, 1)):
///      P'Q' = 1 and Q'P' = F*(1_xi, 1_D * F(alpha, 1_xi)) exactly, and
///      H = h_(1, alpha) - h_(alpha, 1) on (C, D') satisfies dH + Hd = -1 + Q'P';
///      conjugating by U = F*(1, u) gives dH_D + H_D d = -1 + QP on (C, D).
/// The colocal version uses the mirrored cells h_(alpha, 1) - h_(1_xi, alpha).
/// Throws NotLocal before any computation, and IdentityViolation or
/// NotInvertible naming the degree when a certificate fails.
TheoremReport verify_localization_theorem(const SystemPtr& d, const Localization& l, std::size_t max_degree);
TheoremReport verify_colocalization_theorem(const SystemPtr& d, const Colocalization& l, std::size_t max_degree);

/// The same data on opposite categories: a localization of C is a
/// colocalization of C^op and conversely.  Object and morphism ids are kept.
Colocalization opposite_localization(const Localization& l);
Localization opposite_colocalization(const Colocalization& l);
/// D^op on C^op: D^op(f) = D(f), D^op(h, k) = D(k, h).
NaturalSystem opposite_system(const NaturalSystem& d, const FactorizationPtr& fop);

/// x --f--> y localized onto {y}: phi collapses to y, alpha_x = f.
Localization arrow_localization();
/// x --f--> y colocalized onto {x}: phi collapses to x, alpha_y = f.
Colocalization arrow_colocalization();
/// l x 1_k: C x k -> 𝒟 x k.
Localization product_localization(const Localization& l, const CatPtr& k);
/// Reflective full subposet: `reflector[x]` is the least element of the
/// subset above x and must be idempotent.  Throws ValidationError when the
/// data is not a localization.
Localization poset_reflection(const CatPtr& poset, const std::vector<ObjId>& reflector);

/// Identity localization and colocalization of c.
Localization identity_localization(const CatPtr& c);
Colocalization identity_colocalization(const CatPtr& c);

} // namespace bwc
