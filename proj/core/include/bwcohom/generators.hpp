#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "bwcohom/homotopy.hpp"
#include "bwcohom/localization.hpp"

namespace bwc {

/// Seeded source of randomness for the law suites.  Bounded draws use
/// rejection sampling on the raw engine output so that a seed produces the
/// same instances with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::size_t below(std::size_t n);
    /// Uniform in [lo, hi].
    long between(long lo, long hi);
    bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
    template <class T>
    const T& pick(const std::vector<T>& v)
    {
        return v[below(v.size())];
    }

private:
    std::mt19937_64 engine_;
};

/// A labelled random category: `family` names the construction for reports.
struct GeneratedCategory {
    CatPtr category;
    std::string family;
};

/// Random partial order on n points with the given edge probability (percent).
FiniteCategory random_poset(Rng& rng, std::size_t n, std::size_t percent = 40);
/// One of: posets, cyclic groups, small monoids, arrow, (in)discrete
/// categories, a product and a disjoint union, with at most `max_morphisms`
/// morphisms (at least 1).
GeneratedCategory random_category(Rng& rng, std::size_t max_morphisms);

/// Constant, representable, hom, character, reduced and direct-sum systems.
struct GeneratedSystem {
    SystemPtr system;
    std::string family;
};
GeneratedSystem random_system(Rng& rng, const FactorizationPtr& fc);

/// A random 2-morphism (epsilon, gamma): (alpha, t) => (beta, s) of Nat_F out
/// of (C, d) into a system on `small`.  nullopt when no functor small -> C
/// was drawn (never for nonempty C).
std::optional<NatTwoCell> random_nat_cell(Rng& rng, const SystemPtr& d, const CatPtr& small);

/// Two stacked cells (first, second): (alpha, t) => (alpha', t') => (beta, s).
std::optional<std::pair<NatTwoCell, NatTwoCell>> random_ladder(Rng& rng, const SystemPtr& d, const CatPtr& small);

struct GeneratedLocalization {
    Localization localization;
    std::string family;
};
/// Reflections of random posets onto random reflective subsets, the arrow
/// localization, and products of these with Z/2, within `max_morphisms`.
GeneratedLocalization random_localization(Rng& rng, std::size_t max_morphisms);

/// Small source categories for Nat_F instances (at most 3 morphisms).
CatPtr random_small_category(Rng& rng);

} // namespace bwc
