#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "bwcohom/fincat.hpp"

namespace bwc {

/// (h, k): f -> g in FC, i.e. k∘f∘h = g.
struct FPair {
    MorId source_object = 0; ///< f
    MorId target_object = 0; ///< g
    MorId h = 0;             ///< source(g) -> source(f)
    MorId k = 0;             ///< target(f) -> target(g)

    friend bool operator==(const FPair&, const FPair&) = default;
};

/// FC materialised as a FiniteCategory: object ids are morphism ids of the
/// base, and morphism ids order the pairs by (source_object, target_object, h, k).
/// Composition is (h',k')(h,k) = (h h', k' k).
class FactorizationCategory {
public:
    explicit FactorizationCategory(CatPtr base);

    const CatPtr& base() const noexcept { return base_; }
    const CatPtr& category() const noexcept { return fc_; }
    std::size_t pair_count() const noexcept { return pairs_.size(); }
    const FPair& pair(MorId m) const { return pairs_[m]; }
    const std::vector<FPair>& pairs() const noexcept { return pairs_; }

    /// Id of (h, k) out of f, or kNone when (h, k) does not start at f.
    MorId find(MorId f, MorId h, MorId k) const;
    /// (h, 1): f -> f h
    MorId precompose(MorId f, MorId h) const;
    /// (1, k): f -> k f
    MorId postcompose(MorId f, MorId k) const;

private:
    CatPtr base_;
    CatPtr fc_;
    std::vector<FPair> pairs_;
    std::unordered_map<std::uint64_t, MorId> lookup_;
};

using FactorizationPtr = std::shared_ptr<const FactorizationCategory>;
FactorizationPtr build_factorization(const CatPtr& c);

/// F(phi): FC -> FD, f |-> phi(f), (h, k) |-> (phi h, phi k).
Functor factor_functor(const Functor& phi, const FactorizationCategory& fc, const FactorizationCategory& fd);

/// F(alpha): FD -> FC for alpha: phi => psi with phi, psi: D -> C;
/// f: X -> Y |-> alpha_Y phi(f) = psi(f) alpha_X and (h, k) |-> (phi h, psi k).
Functor factor_nat(const NaturalTransformation& alpha, const FactorizationCategory& fd, const FactorizationCategory& fc);

/// (epsilon, gamma): alpha => beta in Cat_F, where alpha: phi => psi,
/// beta: xi => zeta, epsilon: xi => phi, gamma: psi => zeta.
struct TwoCell {
    NaturalTransformation alpha;
    NaturalTransformation beta;
    NaturalTransformation epsilon;
    NaturalTransformation gamma;
};

/// Throws SquareNotCommuting unless gamma alpha epsilon = beta.
void check_two_cell(const TwoCell& cell);
/// Identity cell (1_phi, 1_psi): alpha => alpha.
TwoCell identity_cell(const NaturalTransformation& alpha);
/// Vertical composite in Cat_F: (epsilon, gamma): alpha => beta followed by
/// (epsilon', gamma'): beta => delta is (epsilon epsilon', gamma' gamma).
TwoCell vertical_cells(const TwoCell& second, const TwoCell& first);
/// Horizontal composite in Cat_F of a cell between 1-morphisms D -> C (first)
/// and a cell between 1-morphisms E -> D (second): (epsilon*epsilon', gamma*gamma')
/// between alpha*alpha' and beta*beta'.
TwoCell horizontal_cells(const TwoCell& outer, const TwoCell& inner);

/// F(epsilon, gamma): F(alpha) => F(beta), component at f: X -> Y is (epsilon_X, gamma_Y).
NaturalTransformation factor_two_morphism(const TwoCell& cell, const FactorizationCategory& fd,
                                          const FactorizationCategory& fc);

/// FC -> C^op x C, f: X -> Y |-> (X, Y), (h, k) |-> (h, k).
Functor projection_to_pair(const FactorizationCategory& fc);

} // namespace bwc
