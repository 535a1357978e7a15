#include "bwcohom/workspace.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "bwcohom/bwcomplex.hpp"
#include "json_util.hpp"

namespace bwc {

using nlohmann::json;
using detail::category_json;
using detail::group_json;
using detail::integer_json;
using detail::invariants_json;
using detail::matrix_json;

namespace {

std::string child(const std::string& path, const std::string& key)
{
    std::string out = path + "/";
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& what, const std::string& path)
{
    throw WorkspaceError(what, path.empty() ? "/" : path);
}

void allow_keys(const json& j, std::initializer_list<const char*> keys, const std::string& path)
{
    if (!j.is_object()) fail("expected an object", path);
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* a : keys) known = known || k == a;
        if (!known) fail("unknown field '" + k + "'", child(path, k));
    }
}

const json& need(const json& j, const char* key, const std::string& path)
{
    if (!j.is_object()) fail("expected an object", path);
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field '") + key + "'", path);
    return *it;
}

const json* maybe(const json& j, const char* key)
{
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::string need_string(const json& j, const std::string& path)
{
    if (!j.is_string()) fail("expected a string", path);
    return j.get<std::string>();
}

std::size_t need_size(const json& j, const std::string& path)
{
    if (!j.is_number_integer() || j.get<long long>() < 0) fail("expected a nonnegative integer", path);
    return j.get<std::size_t>();
}

const json& need_array(const json& j, const std::string& path)
{
    if (!j.is_array()) fail("expected an array", path);
    return j;
}

Integer need_integer(const json& j, const std::string& path)
{
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) fail("not a decimal integer", path);
        return v;
    }
    fail("expected an integer", path);
}

/// Index by number, or first entry with that name.
std::size_t resolve(const json& j, const std::vector<std::string>& names, const char* kind, const std::string& path)
{
    if (j.is_number_integer()) {
        auto v = j.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= names.size())
            fail(std::string(kind) + " id " + std::to_string(v) + " out of range", path);
        return static_cast<std::size_t>(v);
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return i;
        fail(std::string("unknown ") + kind + " '" + s + "'", path);
    }
    fail(std::string("expected a ") + kind + " id or name", path);
}

std::vector<std::string> morphism_names(const FiniteCategory& c)
{
    std::vector<std::string> out;
    for (MorId f = 0; f < c.morphism_count(); ++f) out.push_back(c.morphism_name(f));
    return out;
}

/// {"rows", "cols", "entries"} or an array of rows.
IntMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path)
{
    IntMatrix m(rows, cols);
    if (j.is_object()) {
        allow_keys(j, {"rows", "cols", "entries"}, path);
        if (need_size(need(j, "rows", path), child(path, "rows")) != rows ||
            need_size(need(j, "cols", path), child(path, "cols")) != cols)
            fail("matrix must be " + std::to_string(rows) + " x " + std::to_string(cols), path);
        const auto& e = need_array(need(j, "entries", path), child(path, "entries"));
        if (e.size() != rows * cols) fail("entries must have rows * cols values", child(path, "entries"));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k)
                m(i, k) = need_integer(e[i * cols + k], child(child(path, "entries"), i * cols + k));
        return m;
    }
    need_array(j, path);
    if (j.size() != rows) fail("matrix must have " + std::to_string(rows) + " rows", path);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto p = child(path, i);
        if (!j[i].is_array() || j[i].size() != cols) fail("row must have " + std::to_string(cols) + " entries", p);
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = need_integer(j[i][k], child(p, k));
    }
    return m;
}

/// "0", "Z", "Z^r", "Z/n", or {"generators": g, "relations": matrix}.
PresentedGroup parse_group(const json& j, const std::string& path)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "0") return PresentedGroup::free(0);
        if (s == "Z") return PresentedGroup::free(1);
        Integer v;
        if (s.rfind("Z^", 0) == 0 && v.set_str(s.substr(2), 10) == 0 && v >= 0 && v.fits_ulong_p())
            return PresentedGroup::free(v.get_ui());
        if (s.rfind("Z/", 0) == 0 && v.set_str(s.substr(2), 10) == 0 && v >= 1) return PresentedGroup::cyclic(v);
        fail("group must be 0, Z, Z^r or Z/n, got '" + s + "'", path);
    }
    allow_keys(j, {"generators", "relations"}, path);
    const std::size_t g = need_size(need(j, "generators", path), child(path, "generators"));
    const json* rel = maybe(j, "relations");
    if (!rel) return PresentedGroup::free(g);
    std::size_t r = 0;
    if (rel->is_object()) r = need_size(need(*rel, "cols", child(path, "relations")), child(path, "relations/cols"));
    else if (rel->is_array() && !rel->empty() && (*rel)[0].is_array()) r = (*rel)[0].size();
    return PresentedGroup(g, parse_matrix(*rel, g, r, child(path, "relations")));
}

FiniteCategory parse_builtin(const json& j, const std::string& path)
{
    const std::string kind = need_string(need(j, "builtin", path), child(path, "builtin"));
    if (kind == "terminal" || kind == "arrow") {
        allow_keys(j, {"builtin"}, path);
        return kind == "terminal" ? terminal_category() : arrow_category();
    }
    if (kind == "cyclic_group" || kind == "discrete" || kind == "indiscrete") {
        allow_keys(j, {"builtin", "size"}, path);
        const std::size_t n = need_size(need(j, "size", path), child(path, "size"));
        if (kind == "cyclic_group") {
            if (n == 0) fail("cyclic group needs size >= 1", child(path, "size"));
            return cyclic_group_category(n);
        }
        return kind == "discrete" ? discrete_category(n) : indiscrete_category(n);
    }
    if (kind == "poset") {
        // Reflexive-transitive closure of the listed pairs.
        allow_keys(j, {"builtin", "size", "leq", "names"}, path);
        const std::size_t n = need_size(need(j, "size", path), child(path, "size"));
        std::vector<std::string> names;
        if (const json* nm = maybe(j, "names")) {
            for (std::size_t i = 0; i < need_array(*nm, child(path, "names")).size(); ++i)
                names.push_back(need_string((*nm)[i], child(child(path, "names"), i)));
            if (names.size() != n) fail("names must list every point", child(path, "names"));
        }
        std::vector<bool> leq(n * n, false);
        for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
        const json* pairs = maybe(j, "leq");
        if (pairs) {
            need_array(*pairs, child(path, "leq"));
            for (std::size_t k = 0; k < pairs->size(); ++k) {
                const auto p = child(child(path, "leq"), k);
                const json& e = (*pairs)[k];
                if (!e.is_array() || e.size() != 2) fail("expected a pair [a, b]", p);
                std::vector<std::string> labels = names;
                if (labels.empty())
                    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
                leq[resolve(e[0], labels, "point", child(p, 0)) * n + resolve(e[1], labels, "point", child(p, 1))] =
                    true;
            }
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l)
                    if (leq[i * n + k] && leq[k * n + l]) leq[i * n + l] = true;
        return poset_category(n, leq, names);
    }
    fail("unknown builtin '" + kind + "'", child(path, "builtin"));
}

struct ParsedCategory {
    FiniteCategory category;
    ValidationReport conflicts;
};

ParsedCategory parse_category(const json& j, const std::string& path)
{
    if (maybe(j, "builtin")) return {parse_builtin(j, path), {}};
    allow_keys(j, {"objects", "morphisms", "identities", "composition"}, path);
    std::vector<std::string> objects;
    const auto& oj = need_array(need(j, "objects", path), child(path, "objects"));
    for (std::size_t i = 0; i < oj.size(); ++i) objects.push_back(need_string(oj[i], child(child(path, "objects"), i)));

    std::vector<FiniteCategory::Morphism> mors;
    std::vector<std::string> mnames;
    const auto& mj = need_array(need(j, "morphisms", path), child(path, "morphisms"));
    for (std::size_t i = 0; i < mj.size(); ++i) {
        const auto p = child(child(path, "morphisms"), i);
        allow_keys(mj[i], {"name", "src", "tgt"}, p);
        FiniteCategory::Morphism m;
        m.name = maybe(mj[i], "name") ? need_string(mj[i]["name"], child(p, "name")) : "m" + std::to_string(i);
        m.source = resolve(need(mj[i], "src", p), objects, "object", child(p, "src"));
        m.target = resolve(need(mj[i], "tgt", p), objects, "object", child(p, "tgt"));
        mnames.push_back(m.name);
        mors.push_back(std::move(m));
    }

    std::vector<MorId> ids;
    const auto& ij = need_array(need(j, "identities", path), child(path, "identities"));
    if (ij.size() != objects.size()) fail("identities must list one morphism per object", child(path, "identities"));
    for (std::size_t i = 0; i < ij.size(); ++i)
        ids.push_back(resolve(ij[i], mnames, "morphism", child(child(path, "identities"), i)));

    ParsedCategory out;
    std::vector<std::array<MorId, 3>> triples;
    std::map<std::pair<MorId, MorId>, MorId> seen;
    if (const json* cj = maybe(j, "composition")) {
        need_array(*cj, child(path, "composition"));
        for (std::size_t i = 0; i < cj->size(); ++i) {
            const auto p = child(child(path, "composition"), i);
            const json& t = (*cj)[i];
            if (!t.is_array() || t.size() != 3) fail("expected a triple [f, g, gf]", p);
            std::array<MorId, 3> tr{};
            for (std::size_t k = 0; k < 3; ++k) tr[k] = resolve(t[k], mnames, "morphism", child(p, k));
            auto [it, fresh] = seen.emplace(std::make_pair(tr[0], tr[1]), tr[2]);
            if (!fresh && it->second != tr[2])
                out.conflicts.add("composition (" + mnames[tr[0]] + ", " + mnames[tr[1]] + ") listed as both " +
                                  mnames[it->second] + " and " + mnames[tr[2]]);
            triples.push_back(tr);
        }
    }
    out.category = FiniteCategory::from_triples(std::move(objects), std::move(mors), std::move(ids), triples);
    return out;
}

json system_json(const NaturalSystem& d, const std::string& category)
{
    const auto& fc = *d.factorization();
    json values = json::array();
    for (const auto& g : d.values()) values.push_back(group_json(*g));
    json actions = json::array();
    for (MorId p = 0; p < fc.pair_count(); ++p) {
        const FPair& q = fc.pair(p);
        actions.push_back({{"from", q.source_object},
                           {"h", q.h},
                           {"k", q.k},
                           {"matrix", matrix_json(d.action(p).matrix())}});
    }
    return {{"category", category}, {"kind", "explicit"}, {"values", std::move(values)}, {"actions", std::move(actions)}};
}

json header()
{
    return {{"format", kWorkspaceFormat}, {"version", kWorkspaceVersion}};
}

class Loader {
public:
    explicit Loader(const json& doc) : doc_(doc) {}

    Workspace run()
    {
        allow_keys(doc_,
                   {"format", "version", "categories", "functors", "natural_transformations", "natural_systems",
                    "localizations", "tasks", "annotation", "description"},
                   "");
        if (need(doc_, "format", "") != kWorkspaceFormat) fail("not a bwcohom workspace", "/format");
        if (need(doc_, "version", "") != kWorkspaceVersion)
            fail("unsupported version (expected " + std::to_string(kWorkspaceVersion) + ")", "/version");

        for (const auto& [name, j] : section("categories").items()) load_category(name, j);
        for (const auto& [name, j] : section("functors").items()) load_functor(name, j);
        for (const auto& [name, j] : section("natural_transformations").items()) load_transformation(name, j);
        for (const auto& [name, j] : section("natural_systems").items()) load_system(name);
        for (const auto& [name, j] : section("localizations").items()) load_localization(name, j);
        load_tasks();
        return std::move(ws_);
    }

private:
    const json& section(const char* key)
    {
        static const json empty = json::object();
        const json* s = maybe(doc_, key);
        if (!s) return empty;
        if (!s->is_object()) fail("expected an object of named entries", child("", key));
        return *s;
    }

    /// Name of an existing entry of `key`; throws on a dangling reference.
    std::string ref(const json& j, const char* key, const std::string& path)
    {
        const std::string name = need_string(j, path);
        const json* s = maybe(doc_, key);
        if (!s || !s->is_object() || !s->contains(name)) fail("dangling reference to " + std::string(key) + " '" + name + "'", path);
        return name;
    }

    /// False (and a note in the report) when the dependency failed validation.
    bool usable(bool present, const std::string& dep, const std::string& path)
    {
        if (present) return true;
        ws_.report.add(path + ": not checked, depends on invalid '" + dep + "'");
        return false;
    }

    void invalid(const std::string& path, const ValidationReport& r) { ws_.report.merge(r, path + ": "); }
    void invalid(const std::string& path, const std::string& what) { ws_.report.add(path + ": " + what); }
    bool reject(const std::string& path, const std::string& what)
    {
        invalid(path, what);
        return false;
    }
    bool reject(const std::string& path, const ValidationReport& r)
    {
        invalid(path, r);
        return false;
    }

    void load_category(const std::string& name, const json& j)
    {
        const auto path = child("/categories", name);
        auto parsed = parse_category(j, path);
        ValidationReport r = parsed.conflicts;
        r.merge(validate_category(parsed.category));
        if (!r.ok()) return invalid(path, r);
        ws_.categories.emplace(name, make_category(std::move(parsed.category)));
    }

    void load_functor(const std::string& name, const json& j)
    {
        const auto path = child("/functors", name);
        allow_keys(j, {"source", "target", "kind", "objects", "morphisms", "value"}, path);
        const auto src = ref(need(j, "source", path), "categories", child(path, "source"));
        const auto tgt = ref(need(j, "target", path), "categories", child(path, "target"));
        ws_.functor_ends[name] = {src, tgt};
        const bool ok_src = usable(ws_.categories.count(src), src, path);
        if (!ok_src || !usable(ws_.categories.count(tgt), tgt, path)) return;
        const CatPtr& c = ws_.categories.at(src);
        const CatPtr& d = ws_.categories.at(tgt);

        const std::string kind = maybe(j, "kind") ? need_string(j["kind"], child(path, "kind")) : "explicit";
        std::vector<ObjId> objs;
        std::vector<MorId> mors;
        if (kind == "identity") {
            if (!same_category(c, d)) return invalid(path, "identity functor needs source == target");
            ws_.functors.emplace(name, Functor::identity(c));
            return;
        }
        if (kind == "constant") {
            ObjId v = resolve(need(j, "value", path), d->object_names(), "object", child(path, "value"));
            ws_.functors.emplace(name, Functor::constant(c, d, v));
            return;
        }
        if (kind != "explicit") fail("unknown functor kind '" + kind + "'", child(path, "kind"));
        const auto& oj = need_array(need(j, "objects", path), child(path, "objects"));
        const auto& mj = need_array(need(j, "morphisms", path), child(path, "morphisms"));
        if (oj.size() != c->object_count()) fail("objects must map every source object", child(path, "objects"));
        if (mj.size() != c->morphism_count()) fail("morphisms must map every source morphism", child(path, "morphisms"));
        const auto dm = morphism_names(*d);
        for (std::size_t i = 0; i < oj.size(); ++i)
            objs.push_back(resolve(oj[i], d->object_names(), "object", child(child(path, "objects"), i)));
        for (std::size_t i = 0; i < mj.size(); ++i)
            mors.push_back(resolve(mj[i], dm, "morphism", child(child(path, "morphisms"), i)));
        Functor f(c, d, std::move(objs), std::move(mors));
        auto r = validate_functor(f);
        if (!r.ok()) return invalid(path, r);
        ws_.functors.emplace(name, std::move(f));
    }

    void load_transformation(const std::string& name, const json& j)
    {
        const auto path = child("/natural_transformations", name);
        allow_keys(j, {"source", "target", "components"}, path);
        const auto src = ref(need(j, "source", path), "functors", child(path, "source"));
        const auto tgt = ref(need(j, "target", path), "functors", child(path, "target"));
        ws_.transformation_ends[name] = {src, tgt};
        const bool ok_src = usable(ws_.functors.count(src), src, path);
        if (!ok_src || !usable(ws_.functors.count(tgt), tgt, path)) return;
        const Functor& phi = ws_.functors.at(src);
        const Functor& psi = ws_.functors.at(tgt);
        if (!same_category(phi.source(), psi.source()) || !same_category(phi.target(), psi.target()))
            return invalid(path, "source and target functors are not parallel");
        const auto& cj = need_array(need(j, "components", path), child(path, "components"));
        if (cj.size() != phi.source()->object_count())
            fail("components must list one morphism per object", child(path, "components"));
        const auto names = morphism_names(*phi.target());
        std::vector<MorId> comps;
        for (std::size_t i = 0; i < cj.size(); ++i)
            comps.push_back(resolve(cj[i], names, "morphism", child(child(path, "components"), i)));
        NaturalTransformation a(phi, psi, std::move(comps));
        auto r = validate_natural_transformation(a);
        if (!r.ok()) return invalid(path, r);
        ws_.transformations.emplace(name, std::move(a));
    }

    // Systems may refer to each other; resolved depth first.
    bool load_system(const std::string& name)
    {
        if (ws_.systems.count(name)) return true;
        if (failed_systems_.count(name)) return false;
        if (!visiting_.insert(name).second) fail("natural systems refer to each other in a cycle", child("/natural_systems", name));
        const auto path = child("/natural_systems", name);
        bool ok = false;
        try {
            ok = build_system(name, doc_["natural_systems"][name], path);
        } catch (const WorkspaceError&) {
            throw;
        } catch (const Error& e) {
            invalid(path, e.what());
        }
        visiting_.erase(name);
        if (!ok) failed_systems_.insert(name);
        return ok;
    }

    bool dependency_system(const json& j, const std::string& path, std::string& out)
    {
        out = ref(j, "natural_systems", path);
        return usable(load_system(out), out, path);
    }

    bool build_system(const std::string& name, const json& j, const std::string& path)
    {
        const std::string kind = need_string(need(j, "kind", path), child(path, "kind"));
        std::string category;
        NaturalSystem d;

        auto base_category = [&]() -> bool {
            category = ref(need(j, "category", path), "categories", child(path, "category"));
            return usable(ws_.categories.count(category), category, path);
        };

        if (kind == "constant") {
            allow_keys(j, {"category", "kind", "group"}, path);
            if (!base_category()) return false;
            auto fc = build_factorization(ws_.categories.at(category));
            d = constant_system(fc, make_group(parse_group(need(j, "group", path), child(path, "group"))));
        } else if (kind == "hom" || kind == "representable" || kind == "character") {
            allow_keys(j, {"category", "kind", "modulus", "at", "left", "right"}, path);
            if (!base_category()) return false;
            const CatPtr& c = ws_.categories.at(category);
            auto fc = build_factorization(c);
            Integer modulus = maybe(j, "modulus") ? need_integer(j["modulus"], child(path, "modulus")) : Integer(0);
            if (modulus < 0) fail("modulus must be nonnegative", child(path, "modulus"));
            if (kind == "hom") {
                d = from_bifunctor(fc, hom_bifunctor(c, modulus));
            } else if (kind == "representable") {
                MorId at = resolve(need(j, "at", path), morphism_names(*c), "morphism", child(path, "at"));
                d = representable_system(fc, at, modulus);
            } else {
                auto signs = [&](const char* key) {
                    std::vector<int> out;
                    const auto p = child(path, key);
                    const auto& a = need_array(need(j, key, path), p);
                    if (a.size() != c->morphism_count()) fail("one sign per morphism required", p);
                    for (std::size_t i = 0; i < a.size(); ++i) {
                        if (!a[i].is_number_integer() || (a[i] != 1 && a[i] != -1)) fail("sign must be 1 or -1", child(p, i));
                        out.push_back(a[i].get<int>());
                    }
                    return out;
                };
                d = character_system(fc, signs("left"), signs("right"), modulus);
            }
        } else if (kind == "explicit" || kind == "generators") {
            if (kind == "explicit") allow_keys(j, {"category", "kind", "values", "actions"}, path);
            else allow_keys(j, {"category", "kind", "values", "precompose", "postcompose"}, path);
            if (!base_category()) return false;
            const CatPtr& c = ws_.categories.at(category);
            auto fc = build_factorization(c);
            const auto& vj = need_array(need(j, "values", path), child(path, "values"));
            if (vj.size() != c->morphism_count()) fail("values must list one group per morphism", child(path, "values"));
            std::vector<GroupPtr> values;
            for (std::size_t i = 0; i < vj.size(); ++i)
                values.push_back(make_group(parse_group(vj[i], child(child(path, "values"), i))));
            const auto names = morphism_names(*c);
            auto hom_at = [&](const json& e, MorId from, MorId to, const std::string& p) {
                const auto& m = parse_matrix(need(e, "matrix", p), values[to]->generators(),
                                             values[from]->generators(), child(p, "matrix"));
                return GroupHom::make(values[from], values[to], m);
            };
            if (kind == "explicit") {
                std::vector<GroupHom> actions(fc->pair_count());
                std::vector<bool> given(fc->pair_count(), false);
                const auto& aj = need_array(need(j, "actions", path), child(path, "actions"));
                for (std::size_t i = 0; i < aj.size(); ++i) {
                    const auto p = child(child(path, "actions"), i);
                    allow_keys(aj[i], {"from", "h", "k", "matrix"}, p);
                    MorId f = resolve(need(aj[i], "from", p), names, "morphism", child(p, "from"));
                    MorId h = resolve(need(aj[i], "h", p), names, "morphism", child(p, "h"));
                    MorId k = resolve(need(aj[i], "k", p), names, "morphism", child(p, "k"));
                    MorId q = fc->find(f, h, k);
                    if (q == kNone)
                        return reject(p, "(" + names[h] + ", " + names[k] + ") is not a factorization out of " +
                                             names[f]);
                    if (given[q]) return reject(p, "action listed twice");
                    actions[q] = hom_at(aj[i], f, fc->pair(q).target_object, p);
                    given[q] = true;
                }
                for (MorId q = 0; q < fc->pair_count(); ++q)
                    if (!given[q]) {
                        const FPair& pr = fc->pair(q);
                        return reject(child(path, "actions"), "missing action (" + names[pr.h] + ", " +
                                                                  names[pr.k] + ") out of " + names[pr.source_object]);
                    }
                d = NaturalSystem(fc, std::move(values), std::move(actions));
            } else {
                SystemGenerators gens;
                gens.values = values;
                auto read = [&](const char* key, bool pre) {
                    const json* aj = maybe(j, key);
                    if (!aj) return true;
                    const auto sp = child(path, key);
                    need_array(*aj, sp);
                    for (std::size_t i = 0; i < aj->size(); ++i) {
                        const auto p = child(sp, i);
                        allow_keys((*aj)[i], {"f", pre ? "h" : "k", "matrix"}, p);
                        MorId f = resolve(need((*aj)[i], "f", p), names, "morphism", child(p, "f"));
                        MorId x = resolve(need((*aj)[i], pre ? "h" : "k", p), names, "morphism", child(p, pre ? "h" : "k"));
                        MorId to = pre ? c->table(f, x) : c->table(x, f);
                        if (to == kNone)
                            return reject(p, "'" + names[x] + "' does not compose with '" + names[f] + "'");
                        auto& table = pre ? gens.precompose : gens.postcompose;
                        table.emplace(std::make_pair(f, x), hom_at((*aj)[i], f, to, p));
                    }
                    return true;
                };
                if (!read("precompose", true) || !read("postcompose", false)) return false;
                d = complete_from_generators(fc, gens);
            }
        } else if (kind == "pullback") {
            allow_keys(j, {"category", "kind", "system", "along", "functor"}, path);
            std::string inner;
            if (!dependency_system(need(j, "system", path), child(path, "system"), inner)) return false;
            const SystemPtr& e = ws_.systems.at(inner);
            if (maybe(j, "along")) {
                const auto a = ref(j["along"], "natural_transformations", child(path, "along"));
                if (!usable(ws_.transformations.count(a), a, path)) return false;
                const auto& alpha = ws_.transformations.at(a);
                if (!same_category(alpha.codomain(), e->base()))
                    return reject(path, "transformation does not land in the system's category");
                category = ws_.functor_ends.at(ws_.transformation_ends.at(a).first).first;
                d = pullback_along_nat(*e, alpha, build_factorization(alpha.domain()));
            } else {
                const auto g = ref(need(j, "functor", path), "functors", child(path, "functor"));
                if (!usable(ws_.functors.count(g), g, path)) return false;
                const Functor& fun = ws_.functors.at(g);
                if (!same_category(fun.target(), e->base()))
                    return reject(path, "functor does not land in the system's category");
                category = ws_.functor_ends.at(g).first;
                auto fd = build_factorization(fun.source());
                d = pullback(*e, factor_functor(fun, *fd, *e->factorization()), fd);
            }
        } else if (kind == "sum") {
            allow_keys(j, {"category", "kind", "summands"}, path);
            const auto& sj = need_array(need(j, "summands", path), child(path, "summands"));
            if (sj.empty()) fail("at least one summand required", child(path, "summands"));
            std::vector<SystemPtr> parts;
            for (std::size_t i = 0; i < sj.size(); ++i) {
                std::string s;
                if (!dependency_system(sj[i], child(child(path, "summands"), i), s)) return false;
                parts.push_back(ws_.systems.at(s));
                if (i == 0) category = ws_.system_category.at(s);
                else if (ws_.system_category.at(s) != category)
                    return reject(path, "summands live on different categories");
            }
            d = *parts[0];
            for (std::size_t i = 1; i < parts.size(); ++i) d = direct_sum(d, *parts[i]);
        } else if (kind == "reduce") {
            allow_keys(j, {"category", "kind", "system", "modulus"}, path);
            std::string inner;
            if (!dependency_system(need(j, "system", path), child(path, "system"), inner)) return false;
            Integer k = need_integer(need(j, "modulus", path), child(path, "modulus"));
            if (k < 0) fail("modulus must be nonnegative", child(path, "modulus"));
            category = ws_.system_category.at(inner);
            d = reduce_mod(*ws_.systems.at(inner), k);
        } else {
            fail("unknown natural system kind '" + kind + "'", child(path, "kind"));
        }

        const bool derived = kind == "pullback" || kind == "sum" || kind == "reduce";
        if (const json* cj = maybe(j, "category"); cj && derived) {
            const auto declared = ref(*cj, "categories", child(path, "category"));
            if (declared != category) return reject(path, "lives on '" + category + "', not '" + declared + "'");
        }
        auto r = validate_natural_system(d);
        if (!r.ok()) return reject(path, r);
        ws_.systems.emplace(name, make_system(std::move(d)));
        ws_.system_category.emplace(name, category);
        return true;
    }

    void load_localization(const std::string& name, const json& j)
    {
        const auto path = child("/localizations", name);
        allow_keys(j, {"kind", "big", "small", "phi", "psi", "alpha"}, path);
        const auto kind = need_string(need(j, "kind", path), child(path, "kind"));
        if (kind != "localization" && kind != "colocalization")
            fail("kind must be localization or colocalization", child(path, "kind"));
        Workspace::LocalizationRefs refs{ref(need(j, "big", path), "categories", child(path, "big")),
                                         ref(need(j, "small", path), "categories", child(path, "small")),
                                         ref(need(j, "phi", path), "functors", child(path, "phi")),
                                         ref(need(j, "psi", path), "functors", child(path, "psi")),
                                         ref(need(j, "alpha", path), "natural_transformations", child(path, "alpha"))};
        ws_.localization_refs[name] = refs;
        if (!usable(ws_.categories.count(refs.big), refs.big, path) ||
            !usable(ws_.categories.count(refs.small), refs.small, path) ||
            !usable(ws_.functors.count(refs.phi), refs.phi, path) || !usable(ws_.functors.count(refs.psi), refs.psi, path) ||
            !usable(ws_.transformations.count(refs.alpha), refs.alpha, path))
            return;
        const CatPtr& big = ws_.categories.at(refs.big);
        const CatPtr& small = ws_.categories.at(refs.small);
        const Functor& phi = ws_.functors.at(refs.phi);
        const Functor& psi = ws_.functors.at(refs.psi);
        const auto& alpha = ws_.transformations.at(refs.alpha);
        if (!same_category(phi.source(), big) || !same_category(phi.target(), small))
            return invalid(path, "phi must go from big to small");
        if (!same_category(psi.source(), small) || !same_category(psi.target(), big))
            return invalid(path, "psi must go from small to big");
        if (!same_category(alpha.domain(), big) || !same_category(alpha.codomain(), big))
            return invalid(path, "alpha must be a transformation between endofunctors of big");
        ValidationReport r;
        AnyLocalization l;
        if (kind == "localization") {
            Localization loc{big, small, phi, psi, alpha};
            r = validate_localization(loc);
            l = std::move(loc);
        } else {
            Colocalization loc{big, small, phi, psi, alpha};
            r = validate_colocalization(loc);
            l = std::move(loc);
        }
        if (!r.ok()) return invalid(path, r);
        ws_.localizations.emplace(name, std::move(l));
    }

    void load_tasks()
    {
        const json* tj = maybe(doc_, "tasks");
        if (!tj) return;
        need_array(*tj, "/tasks");
        for (std::size_t i = 0; i < tj->size(); ++i) {
            const auto path = child("/tasks", i);
            const json& j = (*tj)[i];
            allow_keys(j, {"command", "system", "category", "localization", "what", "max_degree"}, path);
            Task t;
            t.command = need_string(need(j, "command", path), child(path, "command"));
            if (t.command != "cohomology" && t.command != "localization-check" && t.command != "export")
                fail("unknown command '" + t.command + "'", child(path, "command"));
            if (const json* s = maybe(j, "system")) t.system = ref(*s, "natural_systems", child(path, "system"));
            if (const json* s = maybe(j, "category")) t.category = ref(*s, "categories", child(path, "category"));
            if (const json* s = maybe(j, "localization"))
                t.localization = ref(*s, "localizations", child(path, "localization"));
            if (const json* s = maybe(j, "what")) t.what = need_string(*s, child(path, "what"));
            if (const json* s = maybe(j, "max_degree")) t.max_degree = need_size(*s, child(path, "max_degree"));
            if (t.command == "cohomology" && t.system.empty()) fail("cohomology task needs a system", path);
            if (t.command == "localization-check" && (t.system.empty() || t.localization.empty()))
                fail("localization-check task needs a system and a localization", path);
            if (t.command == "export") {
                if (t.what != "complex" && t.what != "factorization" && t.what != "nerve")
                    fail("what must be complex, factorization or nerve", child(path, "what"));
                if ((t.what == "complex" ? t.system : t.category).empty())
                    fail("export task needs a " + std::string(t.what == "complex" ? "system" : "category"), path);
            }
            ws_.tasks.push_back(std::move(t));
        }
    }

    const json& doc_;
    Workspace ws_;
    std::set<std::string> visiting_;
    std::set<std::string> failed_systems_;
};

std::string line_column(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

const CatPtr& Workspace::category(const std::string& name) const
{
    auto it = categories.find(name);
    if (it == categories.end()) throw WorkspaceError("no valid category '" + name + "'", "");
    return it->second;
}

const SystemPtr& Workspace::system(const std::string& name) const
{
    auto it = systems.find(name);
    if (it == systems.end()) throw WorkspaceError("no valid natural system '" + name + "'", "");
    return it->second;
}

const AnyLocalization& Workspace::localization(const std::string& name) const
{
    auto it = localizations.find(name);
    if (it == localizations.end()) throw WorkspaceError("no valid localization '" + name + "'", "");
    return it->second;
}

Workspace parse_workspace(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string msg = e.what();
        if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
        throw WorkspaceError(msg, line_column(text, e.byte));
    }
    if (!doc.is_object()) throw WorkspaceError("workspace must be a JSON object", "/");
    return Loader(doc).run();
}

Workspace load_workspace(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw WorkspaceError("cannot read file", path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_workspace(ss.str());
    } catch (const WorkspaceError& e) {
        throw WorkspaceError(e.what(), path.string());
    }
}

std::string export_workspace(const Workspace& ws)
{
    json doc = header();
    json cats = json::object();
    for (const auto& [name, c] : ws.categories) cats[name] = category_json(*c);
    json functors = json::object();
    for (const auto& [name, f] : ws.functors)
        functors[name] = {{"source", ws.functor_ends.at(name).first},
                          {"target", ws.functor_ends.at(name).second},
                          {"objects", f.object_map()},
                          {"morphisms", f.morphism_map()}};
    json nts = json::object();
    for (const auto& [name, a] : ws.transformations)
        nts[name] = {{"source", ws.transformation_ends.at(name).first},
                     {"target", ws.transformation_ends.at(name).second},
                     {"components", a.components()}};
    json systems = json::object();
    for (const auto& [name, d] : ws.systems) systems[name] = system_json(*d, ws.system_category.at(name));
    json locs = json::object();
    for (const auto& [name, l] : ws.localizations) {
        const auto& r = ws.localization_refs.at(name);
        locs[name] = {{"kind", std::holds_alternative<Localization>(l) ? "localization" : "colocalization"},
                      {"big", r.big},
                      {"small", r.small},
                      {"phi", r.phi},
                      {"psi", r.psi},
                      {"alpha", r.alpha}};
    }
    json tasks = json::array();
    for (const auto& t : ws.tasks) {
        json tj = {{"command", t.command}, {"max_degree", t.max_degree}};
        if (!t.system.empty()) tj["system"] = t.system;
        if (!t.category.empty()) tj["category"] = t.category;
        if (!t.localization.empty()) tj["localization"] = t.localization;
        if (!t.what.empty()) tj["what"] = t.what;
        tasks.push_back(std::move(tj));
    }
    doc["categories"] = std::move(cats);
    doc["functors"] = std::move(functors);
    doc["natural_transformations"] = std::move(nts);
    doc["natural_systems"] = std::move(systems);
    doc["localizations"] = std::move(locs);
    doc["tasks"] = std::move(tasks);
    return dump(doc);
}

std::string export_factorization(const Workspace& ws, const std::string& category)
{
    const auto fc = build_factorization(ws.category(category));
    const auto& base = *fc->base();
    json objects = json::array();
    for (MorId f = 0; f < base.morphism_count(); ++f) objects.push_back(f);
    json morphisms = json::array();
    for (const auto& p : fc->pairs())
        morphisms.push_back({{"source", p.source_object}, {"target", p.target_object}, {"h", p.h}, {"k", p.k}});
    json doc = header();
    const std::string name = "F(" + category + ")";
    doc["categories"] = {{name, category_json(*fc->category())}};
    doc["annotation"] = {{"factorization_of", category},
                         {"category", name},
                         {"objects", std::move(objects)},
                         {"morphisms", std::move(morphisms)}};
    return dump(doc);
}

std::string export_nerve(const Workspace& ws, const std::string& category, std::size_t max_degree)
{
    const auto& c = *ws.category(category);
    json degrees = json::array();
    for (std::size_t n = 0; n <= max_degree; ++n) {
        json cells = json::array();
        std::size_t degenerate = 0;
        for_each_sequence(c, n, [&](const MorphismSequence& s) {
            json vertices = json::array();
            for (std::size_t i = 0; i <= n; ++i) vertices.push_back(sequence_object(c, s, i));
            bool deg = false;
            for (MorId f : s.arrows) deg = deg || c.is_identity(f);
            degenerate += deg ? 1 : 0;
            cells.push_back({{"arrows", s.arrows}, {"vertices", std::move(vertices)}, {"degenerate", deg}});
        });
        degrees.push_back({{"degree", n},
                           {"count", cells.size()},
                           {"degenerate", degenerate},
                           {"nondegenerate", cells.size() - degenerate},
                           {"cells", std::move(cells)}});
    }
    json doc = header();
    doc["categories"] = {{category, category_json(c)}};
    doc["annotation"] = {{"nerve_of", category}, {"max_degree", max_degree}, {"simplices", std::move(degrees)}};
    return dump(doc);
}

std::string export_complex(const Workspace& ws, const std::string& system, std::size_t max_degree)
{
    auto complex = build_complex(ws.system(system), max_degree);
    json degrees = json::array();
    for (std::size_t n = 0; n <= max_degree; ++n) {
        json basis = json::array();
        for (std::size_t i = 0; i < complex->sequence_count(n); ++i) {
            const MorId* a = complex->arrows(n, i);
            basis.push_back({{"head", complex->head(n, i)},
                             {"arrows", std::vector<MorId>(a, a + n)},
                             {"generators", complex->gen_offset(n, i + 1) - complex->gen_offset(n, i)},
                             {"offset", complex->gen_offset(n, i)}});
        }
        json entry = {{"degree", n},
                      {"basis", std::move(basis)},
                      {"group", group_json(*complex->group(n))},
                      {"invariants", invariants_json(group_invariants(*complex->group(n)))}};
        if (n < max_degree) entry["differential"] = matrix_json(complex->differential(n).matrix());
        degrees.push_back(std::move(entry));
    }
    json doc = header();
    doc["annotation"] = {{"complex_of", system},
                         {"category", ws.system_category.at(system)},
                         {"max_degree", max_degree},
                         {"degrees", std::move(degrees)}};
    return dump(doc);
}

} // namespace bwc
