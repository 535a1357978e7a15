#pragma once

#include <cstddef>

#include "bwcohom/bwcomplex.hpp"

namespace bwc {

/// A 2-morphism (epsilon, gamma): (alpha, t) => (beta, s) of Nat_F between
/// 1-morphisms (C, D) -> (𝒟, E).  `cell` carries alpha = from.anchor() and
/// beta = to.anchor(); the condition is t_σ = s_σ D(epsilon_X, gamma_Y).
struct NatTwoCell {
    TwoCell cell;
    NatSysMorphism from;
    NatSysMorphism to;
};

ValidationReport validate_nat_two_cell(const NatTwoCell& c);
/// Throws TwoMorphismInvalid with the first violation.
void check_nat_two_cell(const NatTwoCell& c);
NatTwoCell identity_nat_cell(const NatSysMorphism& t);
/// first: (alpha, t) => (alpha', t'), second: (alpha', t') => (beta, s).
/// Throws LadderInvalid when they do not stack.
NatTwoCell vertical_nat_cells(const NatTwoCell& second, const NatTwoCell& first);
/// outer between 1-morphisms (C, D) -> (𝒟, E), inner between (𝒟, E) -> (ℰ, G).
NatTwoCell horizontal_nat_cells(const NatTwoCell& outer, const NatTwoCell& inner);

/// F*(phi, t) for t anchored at an identity 1_phi:
///     c |-> t_σ c(phi σ1, ..., phi σn).
/// `a` is built on t.source(), `b` on t.target().  Throws ShapeMismatch.
GradedMap induced_map_nat(const NatSysMorphism& t, const ComplexPtr& a, const ComplexPtr& b, bool verify = true);
/// F*(alpha, t) for any anchor alpha: phi => psi:
///     c |-> t_σ D(1, alpha_Y) c(phi σ1, ..., phi σn).
GradedMap induced_map_2(const NatSysMorphism& t, const ComplexPtr& a, const ComplexPtr& b, bool verify = true);

/// h_(epsilon, gamma): A^{n+1} -> B^n with dh + hd = -F*(alpha, t) + F*(beta, s).
/// Throws TwoMorphismInvalid, and IdentityViolation when `verify` finds the
/// identity broken.
GradedMap homotopy_h(const NatTwoCell& c, const ComplexPtr& a, const ComplexPtr& b, bool verify = true);

/// r for stacked cells: A^{n+2} -> B^n with
///     dr - rd = -h_first - h_second + h_(second ∘ first).
GradedMap homotopy_r_vertical(const NatTwoCell& second, const NatTwoCell& first, const ComplexPtr& a,
                              const ComplexPtr& b, bool verify = true);

/// r' for side-by-side cells, A = F*(C, D), B = F*(𝒟, E), C = F*(ℰ, G):
///     dr' - r'd = -h_inner F*(outer.from) - F*(inner.to) h_outer + h_(outer * inner).
GradedMap homotopy_r_horizontal(const NatTwoCell& outer, const NatTwoCell& inner, const ComplexPtr& a,
                                const ComplexPtr& b, const ComplexPtr& c, bool verify = true);

struct HomotopyClassVerdict {
    bool equal = false;
    /// The equations dr - rd = h2 - h1 were imposed on A^1 .. A^{N-1}; nothing
    /// is claimed beyond that.
    std::size_t certified_degree = 0;
    /// r with dr - rd = h2 - h1 when equal.
    GradedMap witness;
};

/// Decides whether two homotopies between the same chain maps are relatively
/// homotopic within the truncation, by solving one integer linear system for
/// r^2..r^N and the well-definedness witnesses.  Throws DimensionMismatch
/// when the system would have more than `max_unknowns` columns.
HomotopyClassVerdict homotopy_class_equal(const GradedMap& h1, const GradedMap& h2, std::size_t max_unknowns = 6000);

} // namespace bwc
