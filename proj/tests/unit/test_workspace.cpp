#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "bwcohom/bwcomplex.hpp"
#include "bwcohom/reports.hpp"
#include "bwcohom/workspace.hpp"
#include "oracles.hpp"

using namespace bwc;
using nlohmann::json;

namespace {

const std::string kSamples = BWCOHOM_SAMPLES_DIR;

std::string minimal(const std::string& body)
{
    return R"({"format": "bwcohom-workspace", "version": 1)" + (body.empty() ? "" : ", " + body) + "}";
}

std::string error_location(const std::string& text)
{
    try {
        parse_workspace(text);
    } catch (const WorkspaceError& e) {
        return e.location();
    }
    return "no error";
}

bool mentions(const ValidationReport& r, const std::string& needle)
{
    for (const auto& v : r.violations)
        if (v.find(needle) != std::string::npos) return true;
    return false;
}

Integer entry(const json& j) { return j.is_string() ? Integer(j.get<std::string>()) : Integer(j.get<long>()); }

IntMatrix read_matrix(const json& j)
{
    IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& e = j.at("entries");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = entry(e.at(i * m.cols() + k));
    return m;
}

} // namespace

TEST(Workspace, SamplesLoad)
{
    auto arrow = load_workspace(kSamples + "/arrow.json");
    EXPECT_TRUE(arrow.valid());
    EXPECT_EQ(arrow.categories.size(), 2u);
    EXPECT_EQ(arrow.systems.size(), 6u);
    EXPECT_EQ(arrow.localizations.size(), 2u);
    EXPECT_EQ(arrow.tasks.size(), 4u);
    EXPECT_TRUE(std::holds_alternative<Colocalization>(arrow.localization("onto_x")));

    auto cyclic = load_workspace(kSamples + "/cyclic.json");
    ASSERT_TRUE(cyclic.valid());
    auto h = cohomology_all(*build_complex(cyclic.system("Z2_Z"), 4));
    EXPECT_EQ(h[2].to_string(), "Z/2");
    auto sign = cohomology_all(*build_complex(cyclic.system("Z2_sign"), 4));
    EXPECT_EQ(sign[0].to_string(), "0");
    EXPECT_EQ(sign[1].to_string(), "Z/2");

    auto circle = load_workspace(kSamples + "/pseudo_circle.json");
    ASSERT_TRUE(circle.valid());
    EXPECT_EQ(cohomology_all(*build_complex(circle.system("Z"), 3))[1].to_string(), "Z");
}

TEST(Workspace, BuiltinsAndDerivedSystems)
{
    auto ws = parse_workspace(minimal(R"(
      "categories": {
        "P": {"builtin": "poset", "size": 3, "names": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"]]},
        "I": {"builtin": "indiscrete", "size": 2},
        "D": {"builtin": "discrete", "size": 2},
        "C": {"builtin": "cyclic_group", "size": 4}
      },
      "natural_systems": {
        "free": {"category": "C", "kind": "constant", "group": {"generators": 2, "relations": [[2], [0]]}},
        "hom": {"category": "P", "kind": "hom"},
        "rep": {"category": "P", "kind": "representable", "at": "a<=c", "modulus": 2},
        "sum": {"kind": "sum", "summands": ["hom", "rep"]},
        "red": {"kind": "reduce", "system": "hom", "modulus": 3},
        "D2": {"category": "D", "kind": "constant", "group": "Z^2"}
      })"));
    ASSERT_TRUE(ws.valid()) << validation_report(ws, Format::human);
    // Transitive closure adds a <= c.
    EXPECT_EQ(ws.category("P")->morphism_count(), 6u);
    EXPECT_EQ(ws.category("I")->morphism_count(), 4u);
    EXPECT_EQ(ws.system("free")->value(0)->generators(), 2u);
    EXPECT_EQ(cohomology_all(*build_complex(ws.system("D2"), 2))[0].to_string(), "Z^4");
    EXPECT_EQ(ws.system_category.at("sum"), "P");
    EXPECT_EQ(cohomology_all(*build_complex(ws.system("red"), 2))[0],
              group_invariants(PresentedGroup::cyclic(3)));
}

TEST(Workspace, SyntaxErrorsReportLineAndColumn)
{
    const std::string loc = error_location("{\n  \"format\": \"bwcohom-workspace\",\n  \"version\": 1,,\n}");
    EXPECT_NE(loc.find("line 3"), std::string::npos) << loc;
    EXPECT_NE(loc.find("column"), std::string::npos) << loc;
}

TEST(Workspace, SchemaErrorsReportJsonPointers)
{
    EXPECT_EQ(error_location(R"({"format": "other", "version": 1})"), "/format");
    EXPECT_EQ(error_location(R"({"format": "bwcohom-workspace", "version": 7})"), "/version");
    EXPECT_EQ(error_location(minimal(R"("extra": 1)")), "/extra");
    EXPECT_EQ(error_location(minimal(R"("categories": {"T": {"builtin": "sphere"}})")), "/categories/T/builtin");
    EXPECT_EQ(error_location(minimal(R"("categories": {"T": {"builtin": "terminal"}},
        "natural_systems": {"Z": {"category": "U", "kind": "constant", "group": "Z"}})")),
              "/natural_systems/Z/category");
    EXPECT_EQ(error_location(minimal(R"("categories": {"T": {"builtin": "terminal"}},
        "natural_systems": {"Z": {"category": "T", "kind": "constant", "group": "Z/x"}})")),
              "/natural_systems/Z/group");
    EXPECT_EQ(error_location(minimal(R"("natural_systems": {"a": {"kind": "reduce", "system": "b", "modulus": 2},
        "b": {"kind": "reduce", "system": "a", "modulus": 2}})"))
                  .rfind("/natural_systems/", 0),
              0u);
}

TEST(Workspace, ValidationFailuresAreCollected)
{
    auto ws = parse_workspace(minimal(R"(
      "categories": {
        "A": {"objects": ["x", "y"],
              "morphisms": [{"name": "1x", "src": "x", "tgt": "x"}, {"name": "1y", "src": "y", "tgt": "y"},
                            {"name": "f", "src": "x", "tgt": "y"}],
              "identities": ["1x", "1y"],
              "composition": [["f", "1x", "1y"]]},
        "T": {"builtin": "terminal"}
      },
      "natural_systems": {
        "Z": {"category": "A", "kind": "constant", "group": "Z"},
        "ok": {"category": "T", "kind": "constant", "group": "Z"}
      })"));
    EXPECT_FALSE(ws.valid());
    EXPECT_TRUE(mentions(ws.report, "composition ('f', '1x', '1y') is given for a non-composable pair"));
    EXPECT_TRUE(mentions(ws.report, "not checked, depends on invalid 'A'"));
    EXPECT_EQ(ws.systems.count("ok"), 1u);
    EXPECT_EQ(ws.systems.count("Z"), 0u);
    EXPECT_THROW(ws.system("Z"), WorkspaceError);
    const std::string human = validation_report(ws, Format::human);
    EXPECT_EQ(human.rfind("invalid: ", 0), 0u);
}

TEST(Workspace, BrokenExplicitSystemIsInvalid)
{
    auto ws = parse_workspace(minimal(R"(
      "categories": {"C": {"builtin": "cyclic_group", "size": 2}},
      "natural_systems": {
        "bad": {"category": "C", "kind": "generators", "values": ["Z", "Z"],
                "precompose": [{"f": "1", "h": "g", "matrix": [[2]]}], "postcompose": []}
      })"));
    EXPECT_FALSE(ws.valid());
    EXPECT_EQ(ws.systems.count("bad"), 0u);
}

TEST(Workspace, ExportRoundTrip)
{
    for (const char* name : {"arrow.json", "cyclic.json", "pseudo_circle.json"}) {
        auto ws = load_workspace(kSamples + "/" + name);
        ASSERT_TRUE(ws.valid());
        const std::string text = export_workspace(ws);
        auto again = parse_workspace(text);
        ASSERT_TRUE(again.valid()) << name << "\n" << validation_report(again, Format::human);
        EXPECT_EQ(export_workspace(again), text) << name;
        for (const auto& [cname, c] : ws.categories) EXPECT_EQ(*again.category(cname), *c);
        for (const auto& [sname, s] : ws.systems) {
            const auto& t = again.system(sname);
            ASSERT_EQ(t->actions().size(), s->actions().size());
            for (std::size_t p = 0; p < s->actions().size(); ++p) EXPECT_TRUE(homs_equal(t->action(p), s->action(p)));
            EXPECT_EQ(cohomology_all(*build_complex(t, 3)), cohomology_all(*build_complex(s, 3))) << sname;
        }
        EXPECT_EQ(again.tasks.size(), ws.tasks.size());
    }
}

TEST(Workspace, FactorizationExport)
{
    auto ws = load_workspace(kSamples + "/arrow.json");
    const std::string text = export_factorization(ws, "A");
    auto fc = parse_workspace(text);
    ASSERT_TRUE(fc.valid());
    const auto& cat = *fc.category("F(A)");
    EXPECT_EQ(cat.object_count(), 3u);
    EXPECT_EQ(cat.morphism_count(), 5u);
    auto doc = json::parse(text);
    EXPECT_EQ(doc["annotation"]["morphisms"].size(), 5u);
}

TEST(Workspace, NerveExportCountsSimplices)
{
    auto ws = load_workspace(kSamples + "/pseudo_circle.json");
    const auto& c = *ws.category("S");
    auto doc = json::parse(export_nerve(ws, "S", 3));
    auto nerve = oracle::nerve_complex(c, 3);
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto& d = doc["annotation"]["simplices"][n];
        EXPECT_EQ(d["count"].get<std::uint64_t>(), oracle::count_chains(c, n));
        if (n) EXPECT_EQ(d["nondegenerate"].get<std::size_t>(), nerve.dims[n]) << n;
    }
    EXPECT_EQ(doc["annotation"]["simplices"][1]["count"].get<int>(), 8);
    EXPECT_EQ(doc["annotation"]["simplices"][1]["degenerate"].get<int>(), 4);
}

TEST(Workspace, ComplexExportIsAComplex)
{
    auto ws = load_workspace(kSamples + "/cyclic.json");
    auto doc = json::parse(export_complex(ws, "Z2_Z", 3));
    const auto& degrees = doc["annotation"]["degrees"];
    ASSERT_EQ(degrees.size(), 4u);
    std::vector<IntMatrix> d;
    for (std::size_t n = 0; n < 3; ++n) d.push_back(read_matrix(degrees[n]["differential"]));
    for (std::size_t n = 0; n + 1 < 3; ++n) EXPECT_TRUE((d[n + 1] * d[n]).is_zero());
    oracle::FreeComplex fc;
    for (std::size_t n = 0; n <= 3; ++n) fc.dims.push_back(degrees[n]["group"]["generators"].get<std::size_t>());
    fc.d = d;
    EXPECT_EQ(oracle::integer_cohomology(fc, 2).to_string(), "Z/2");
    EXPECT_FALSE(degrees[3].contains("differential"));
}

TEST(Workspace, MissingFile)
{
    EXPECT_THROW(load_workspace(kSamples + "/does-not-exist.json"), WorkspaceError);
}
