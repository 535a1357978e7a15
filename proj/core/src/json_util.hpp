#pragma once

// JSON encodings shared by workspace.cpp and reports.cpp.

#include <nlohmann/json.hpp>

#include "bwcohom/abelian.hpp"
#include "bwcohom/fincat.hpp"

namespace bwc::detail {

using nlohmann::json;

/// Numbers when they fit a long, decimal strings otherwise.
inline json integer_json(const Integer& v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

inline json matrix_json(const IntMatrix& m)
{
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(integer_json(e));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline json group_json(const PresentedGroup& g)
{
    return {{"generators", g.generators()}, {"relations", matrix_json(g.relations())}};
}

inline json invariants_json(const GroupInvariants& inv)
{
    json torsion = json::array();
    for (const auto& d : inv.torsion) torsion.push_back(integer_json(d));
    return {{"rank", inv.free_rank}, {"torsion", std::move(torsion)}};
}

/// Explicit tables: every defined composite is listed.
inline json category_json(const FiniteCategory& c)
{
    json objects = c.object_names();
    json morphisms = json::array();
    json identities = json::array();
    json composition = json::array();
    for (MorId f = 0; f < c.morphism_count(); ++f)
        morphisms.push_back({{"name", c.morphism_name(f)}, {"src", c.source(f)}, {"tgt", c.target(f)}});
    for (ObjId x = 0; x < c.object_count(); ++x) identities.push_back(c.identity(x));
    for (MorId f = 0; f < c.morphism_count(); ++f)
        for (MorId g = 0; g < c.morphism_count(); ++g)
            if (c.table(g, f) != kNone) composition.push_back({f, g, c.table(g, f)});
    return {{"objects", std::move(objects)},
            {"morphisms", std::move(morphisms)},
            {"identities", std::move(identities)},
            {"composition", std::move(composition)}};
}

} // namespace bwc::detail
