#include "bwcohom/laws.hpp"

#include <algorithm>
#include <stdexcept>

#include "bwcohom/generators.hpp"

namespace bwc {

namespace {

enum class Outcome { pass, skip };

struct Base {
    FactorizationPtr fc;
    SystemPtr system;
    ComplexPtr complex;
};

Base draw_base(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto gc = random_category(rng, std::max<std::size_t>(cfg.max_morphisms, 1));
    auto fc = build_factorization(gc.category);
    auto gs = random_system(rng, fc);
    instance = gc.family + " |Mor|=" + std::to_string(gc.category->morphism_count()) + " / " + gs.family;
    return {fc, gs.system, nullptr};
}

void ensure_complex(Base& b, const LawConfig& cfg)
{
    if (!b.complex) b.complex = build_complex(b.system, cfg.max_degree);
}

void require_graded_equal(const GradedMap& lhs, const GradedMap& rhs, const std::string& what)
{
    for (std::size_t k = 0; k <= lhs.max_degree(); ++k) {
        if (!lhs.has(k)) continue;
        auto t = static_cast<std::size_t>(static_cast<long>(k) + lhs.shift());
        require_equal(lhs.at(k), rhs.at(k), what, k, *lhs.source(), k, *lhs.target(), t);
    }
}

bool same_nat_morphism(const NatSysMorphism& a, const NatSysMorphism& b)
{
    if (!(a.anchor() == b.anchor())) return false;
    if (!same_system(a.source(), b.source()) || !same_system(a.target(), b.target())) return false;
    for (std::size_t i = 0; i < a.components().size(); ++i)
        if (!homs_equal(a.component(i), b.component(i))) return false;
    return true;
}

bool same_nat_cell(const NatTwoCell& a, const NatTwoCell& b)
{
    return a.cell.alpha == b.cell.alpha && a.cell.beta == b.cell.beta && a.cell.epsilon == b.cell.epsilon &&
           a.cell.gamma == b.cell.gamma && same_nat_morphism(a.from, b.from) && same_nat_morphism(a.to, b.to);
}

Outcome law_dd(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto b = draw_base(rng, cfg, instance);
    build_complex(b.system, cfg.max_degree, true);
    return Outcome::pass;
}

Outcome law_chain_map(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto b = draw_base(rng, cfg, instance);
    auto cell = random_nat_cell(rng, b.system, random_small_category(rng));
    if (!cell) return Outcome::skip;
    ensure_complex(b, cfg);
    auto target = build_complex(cell->from.target(), cfg.max_degree);
    induced_map_2(cell->from, b.complex, target, true);
    induced_map_2(cell->to, b.complex, target, true);
    return Outcome::pass;
}

Outcome law_functoriality(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto b = draw_base(rng, cfg, instance);
    ensure_complex(b, cfg);
    require_graded_equal(induced_map_2(NatSysMorphism::identity(b.system), b.complex, b.complex, false),
                         graded_identity(b.complex), "F*(1) = 1");

    auto outer = random_nat_cell(rng, b.system, random_small_category(rng));
    if (!outer) return Outcome::skip;
    auto inner = random_nat_cell(rng, outer->from.target(), random_small_category(rng));
    if (!inner) return Outcome::skip;
    auto mid = build_complex(outer->from.target(), cfg.max_degree);
    auto last = build_complex(inner->from.target(), cfg.max_degree);
    auto composite = compose_natsys_morphisms(inner->from, outer->from);
    auto report = validate_natsys_morphism(composite);
    if (!report.ok()) throw ValidationError("composite 1-morphism", report);
    require_graded_equal(induced_map_2(composite, b.complex, last, false),
                         graded_compose(induced_map_2(inner->from, mid, last, false),
                                        induced_map_2(outer->from, b.complex, mid, false)),
                         "F*(composite) = F*(inner) F*(outer)");

    check_nat_two_cell(horizontal_nat_cells(*outer, *inner));
    check_nat_two_cell(identity_nat_cell(outer->from));
    return Outcome::pass;
}

Outcome law_h(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto b = draw_base(rng, cfg, instance);
    auto cell = random_nat_cell(rng, b.system, random_small_category(rng));
    if (!cell) return Outcome::skip;
    ensure_complex(b, cfg);
    homotopy_h(*cell, b.complex, build_complex(cell->from.target(), cfg.max_degree), true);
    return Outcome::pass;
}

Outcome law_r(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto b = draw_base(rng, cfg, instance);
    auto ladder = random_ladder(rng, b.system, random_small_category(rng));
    if (!ladder) return Outcome::skip;
    ensure_complex(b, cfg);
    homotopy_r_vertical(ladder->second, ladder->first, b.complex,
                        build_complex(ladder->first.from.target(), cfg.max_degree), true);
    return Outcome::pass;
}

Outcome law_r_prime(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto b = draw_base(rng, cfg, instance);
    auto outer = random_nat_cell(rng, b.system, random_small_category(rng));
    if (!outer) return Outcome::skip;
    auto inner = random_nat_cell(rng, outer->from.target(), random_small_category(rng));
    if (!inner) return Outcome::skip;
    ensure_complex(b, cfg);
    homotopy_r_horizontal(*outer, *inner, b.complex, build_complex(outer->from.target(), cfg.max_degree),
                          build_complex(inner->from.target(), cfg.max_degree), true);
    return Outcome::pass;
}

// Cell level: (c2 c1) * (e2 e1) = (c2 * e2)(c1 * e1).
// Chain level: r = h_e1 h_c1 satisfies dr - rd = h'p + q'h - p'h - h'q.
Outcome law_interchange(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto b = draw_base(rng, cfg, instance);
    auto left = random_ladder(rng, b.system, random_small_category(rng));
    if (!left) return Outcome::skip;
    auto right = random_ladder(rng, left->first.from.target(), random_small_category(rng));
    if (!right) return Outcome::skip;

    auto lhs = horizontal_nat_cells(vertical_nat_cells(left->second, left->first),
                                    vertical_nat_cells(right->second, right->first));
    auto rhs = vertical_nat_cells(horizontal_nat_cells(left->second, right->second),
                                  horizontal_nat_cells(left->first, right->first));
    if (!same_nat_cell(lhs, rhs)) throw TwoMorphismInvalid("interchange law fails for the 2-cells");

    ensure_complex(b, cfg);
    auto mid = build_complex(left->first.from.target(), cfg.max_degree);
    auto last = build_complex(right->first.from.target(), cfg.max_degree);
    const auto& c1 = left->first;
    const auto& e1 = right->first;
    auto h = homotopy_h(c1, b.complex, mid, false);
    auto h2 = homotopy_h(e1, mid, last, false);
    auto p = induced_map_2(c1.from, b.complex, mid, false);
    auto q = induced_map_2(c1.to, b.complex, mid, false);
    auto p2 = induced_map_2(e1.from, mid, last, false);
    auto q2 = induced_map_2(e1.to, mid, last, false);
    auto r = graded_compose(h2, h);
    auto expected = graded_sub(graded_add(graded_compose(h2, p), graded_compose(q2, h)),
                               graded_add(graded_compose(p2, h), graded_compose(h2, q)));
    check_second_homotopy(r, expected, "interchange dr-rd");
    return Outcome::pass;
}

// h_first + h_second and h_(second first) are homotopies between the same
// chain maps; they must be relatively homotopic.
Outcome law_relative_class(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto b = draw_base(rng, cfg, instance);
    auto ladder = random_ladder(rng, b.system, random_small_category(rng));
    if (!ladder) return Outcome::skip;
    ensure_complex(b, cfg);
    auto target = build_complex(ladder->first.from.target(), cfg.max_degree);
    auto sum = graded_add(homotopy_h(ladder->first, b.complex, target, false),
                          homotopy_h(ladder->second, b.complex, target, false));
    auto composite = homotopy_h(vertical_nat_cells(ladder->second, ladder->first), b.complex, target, false);
    HomotopyClassVerdict verdict;
    try {
        verdict = homotopy_class_equal(sum, composite);
    } catch (const DimensionMismatch&) {
        return Outcome::skip;
    }
    if (!verdict.equal) throw IdentityViolation("h_first + h_second not relatively homotopic to h_composite", 0, "-");
    return Outcome::pass;
}

SystemPtr pulled_local_system(Rng& rng, const Localization& l, std::string& instance)
{
    auto fc = build_factorization(l.big);
    auto e = random_system(rng, fc);
    instance += " / " + e.family + " pulled back";
    return make_system(pullback_along_nat(*e.system, l.alpha, fc));
}

Outcome law_localization(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto gl = random_localization(rng, std::max<std::size_t>(cfg.max_morphisms, 3));
    instance = gl.family;
    auto d = pulled_local_system(rng, gl.localization, instance);
    verify_localization_theorem(d, gl.localization, cfg.max_degree);
    return Outcome::pass;
}

Outcome law_colocalization(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto gl = random_localization(rng, std::max<std::size_t>(cfg.max_morphisms, 3));
    instance = gl.family + " (opposite)";
    auto d = pulled_local_system(rng, gl.localization, instance);
    auto co = opposite_localization(gl.localization);
    auto dop = make_system(opposite_system(*d, build_factorization(co.big)));
    verify_colocalization_theorem(dop, co, cfg.max_degree);
    return Outcome::pass;
}

void require_agreement(const Characterization& c, const std::string& which)
{
    if (!c.agree())
        throw IdentityViolation(which + ": condition (1) is " + (c.condition1 ? "true" : "false") +
                                    " but condition (3) is " + (c.condition3 ? "true" : "false"),
                                0, c.witness ? "f=" + std::to_string(*c.witness) : "-");
    if (c.condition2 && !*c.condition2) throw IdentityViolation(which + ": condition (2) fails", 0, "-");
}

Outcome law_characterization(Rng& rng, const LawConfig& cfg, std::string& instance)
{
    auto gl = random_localization(rng, std::max<std::size_t>(cfg.max_morphisms, 3));
    const auto& l = gl.localization;
    auto fc = build_factorization(l.big);
    auto e = random_system(rng, fc);
    instance = gl.family + " / " + e.family;
    require_agreement(local_characterization(e.system, l), "local");

    auto co = opposite_localization(l);
    auto dop = make_system(opposite_system(*e.system, build_factorization(co.big)));
    require_agreement(colocal_characterization(dop, co), "colocal");
    return Outcome::pass;
}

struct LawEntry {
    const char* name;
    Outcome (*fn)(Rng&, const LawConfig&, std::string&);
};

const LawEntry kLaws[] = {
    {"dd", law_dd},
    {"chain-map", law_chain_map},
    {"functoriality", law_functoriality},
    {"dh+hd", law_h},
    {"dr-rd", law_r},
    {"dr'-r'd", law_r_prime},
    {"interchange", law_interchange},
    {"relative-class", law_relative_class},
    {"localization", law_localization},
    {"colocalization", law_colocalization},
    {"characterization", law_characterization},
};

} // namespace

const std::vector<std::string>& law_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : kLaws) v.emplace_back(e.name);
        return v;
    }();
    return names;
}

bool is_law(const std::string& name)
{
    const auto& names = law_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

LawResult run_law(const std::string& law, const LawConfig& config)
{
    const LawEntry* entry = nullptr;
    for (const auto& e : kLaws)
        if (law == e.name) entry = &e;
    if (!entry) throw std::invalid_argument("unknown law '" + law + "'");

    LawResult result;
    result.law = law;
    for (std::size_t i = 0; i < config.cases; ++i) {
        const std::uint64_t seed = config.seed + i;
        Rng rng(seed);
        std::string instance;
        try {
            if (entry->fn(rng, config, instance) == Outcome::skip)
                ++result.skipped;
            else
                ++result.passed;
        } catch (const Error& e) {
            result.failures.push_back({seed, instance, e.what()});
        }
    }
    return result;
}

std::vector<LawResult> run_laws(const std::string& law, const LawConfig& config)
{
    std::vector<LawResult> out;
    if (law == "all") {
        for (const auto& name : law_names()) out.push_back(run_law(name, config));
    } else {
        out.push_back(run_law(law, config));
    }
    return out;
}

} // namespace bwc
