#include "bwcohom/reports.hpp"

#include <sstream>
#include <stdexcept>

#include "json_util.hpp"

namespace bwc {

using nlohmann::json;
using detail::invariants_json;

namespace {

std::string degrees_line(const std::vector<GroupInvariants>& groups)
{
    std::string out;
    for (std::size_t n = 0; n < groups.size(); ++n) {
        if (n) out += ' ';
        out += "H" + std::to_string(n) + "=" + groups[n].compact();
    }
    return out;
}

json degrees_json(const std::vector<GroupInvariants>& groups)
{
    json out = json::array();
    for (std::size_t n = 0; n < groups.size(); ++n) {
        json e = invariants_json(groups[n]);
        e["degree"] = n;
        out.push_back(std::move(e));
    }
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* status_name(LocalizationResult::Status s)
{
    switch (s) {
    case LocalizationResult::Status::pass: return "pass";
    case LocalizationResult::Status::not_local: return "not-local";
    case LocalizationResult::Status::failed: return "certificate-failed";
    }
    return "";
}

} // namespace

Format parse_format(const std::string& s)
{
    if (s == "human") return Format::human;
    if (s == "machine") return Format::machine;
    throw std::invalid_argument("format must be human or machine");
}

std::string cohomology_report(const std::vector<CohomologyResult>& results, Format format)
{
    if (format == Format::human) {
        std::string out;
        for (const auto& r : results) {
            if (results.size() > 1) out += r.system + ": ";
            out += degrees_line(r.groups) + "\n";
        }
        return out;
    }
    json arr = json::array();
    for (const auto& r : results)
        arr.push_back({{"system", r.system},
                       {"category", r.category},
                       {"max_degree", r.max_degree},
                       {"cohomology", degrees_json(r.groups)}});
    return dump({{"command", "cohomology"}, {"results", std::move(arr)}});
}

std::string validation_report(const Workspace& ws, Format format)
{
    if (format == Format::human) {
        std::ostringstream os;
        if (ws.valid()) {
            os << "valid: " << ws.categories.size() << " categories, " << ws.functors.size() << " functors, "
               << ws.transformations.size() << " natural transformations, " << ws.systems.size()
               << " natural systems, " << ws.localizations.size() << " localizations, " << ws.tasks.size()
               << " tasks\n";
        } else {
            os << "invalid: " << ws.report.violations.size() << " violation"
               << (ws.report.violations.size() == 1 ? "" : "s") << "\n";
            for (const auto& v : ws.report.violations) os << "  " << v << "\n";
        }
        return os.str();
    }
    json counts = {{"categories", ws.categories.size()},
                   {"functors", ws.functors.size()},
                   {"natural_transformations", ws.transformations.size()},
                   {"natural_systems", ws.systems.size()},
                   {"localizations", ws.localizations.size()},
                   {"tasks", ws.tasks.size()}};
    return dump({{"command", "validate"},
                 {"valid", ws.valid()},
                 {"counts", std::move(counts)},
                 {"violations", ws.report.violations}});
}

std::string law_report(const std::vector<LawResult>& results, const LawConfig& config, Format format)
{
    bool ok = true;
    for (const auto& r : results) ok = ok && r.ok();
    if (format == Format::human) {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.ok() ? "pass " : "FAIL ") << r.law << ": " << r.passed << " passed, " << r.skipped
               << " skipped, " << r.failures.size() << " failed\n";
            for (const auto& f : r.failures)
                os << "  seed " << f.seed << " [" << f.instance << "] " << f.message << "\n"
                   << "  replay: check-laws --law '" << r.law << "' --seed " << f.seed << " --cases 1 --max-morphisms "
                   << config.max_morphisms << " --max-degree " << config.max_degree << "\n";
        }
        os << (ok ? "all laws hold" : "law failures found") << " (seed " << config.seed << ", " << config.cases
           << " cases, max-morphisms " << config.max_morphisms << ", max-degree " << config.max_degree << ")\n";
        return os.str();
    }
    json laws = json::array();
    for (const auto& r : results) {
        json failures = json::array();
        for (const auto& f : r.failures)
            failures.push_back({{"seed", f.seed}, {"instance", f.instance}, {"message", f.message}});
        laws.push_back({{"law", r.law},
                        {"passed", r.passed},
                        {"skipped", r.skipped},
                        {"failures", std::move(failures)}});
    }
    return dump({{"command", "check-laws"},
                 {"ok", ok},
                 {"config",
                  {{"seed", config.seed},
                   {"cases", config.cases},
                   {"max_morphisms", config.max_morphisms},
                   {"max_degree", config.max_degree}}},
                 {"laws", std::move(laws)}});
}

std::string localization_report(const std::vector<LocalizationResult>& results, Format format)
{
    if (format == Format::human) {
        std::ostringstream os;
        for (const auto& r : results) {
            os << (r.colocal ? "colocalization " : "localization ") << r.localization << ", system " << r.system
               << ", degrees 0.." << (r.max_degree ? r.max_degree - 1 : 0) << "\n";
            if (r.status == LocalizationResult::Status::not_local) {
                os << "  NOT " << (r.colocal ? "COLOCAL" : "LOCAL") << ": "
                   << (r.colocal ? "D(f, 1): D(g) -> D(gf)" : "D(1, f): D(g) -> D(fg)")
                   << " is not invertible for some g, f = " << r.witness << "\n";
                continue;
            }
            if (r.status == LocalizationResult::Status::failed) {
                os << "  CERTIFICATE FAILED: " << r.message << "\n";
                continue;
            }
            os << "  big:   " << degrees_line(r.report->big) << "\n";
            os << "  small: " << degrees_line(r.report->small) << "\n";
            for (const auto& c : r.report->certificates) {
                os << "  pass " << c.name << "\n";
                for (const auto& s : c.steps) os << "    " << s << "\n";
            }
        }
        return os.str();
    }
    json arr = json::array();
    for (const auto& r : results) {
        json e = {{"localization", r.localization},
                  {"system", r.system},
                  {"kind", r.colocal ? "colocalization" : "localization"},
                  {"max_degree", r.max_degree},
                  {"status", status_name(r.status)}};
        if (r.status == LocalizationResult::Status::not_local) e["witness"] = r.witness;
        if (r.status == LocalizationResult::Status::failed) e["message"] = r.message;
        if (r.report) {
            e["big"] = degrees_json(r.report->big);
            e["small"] = degrees_json(r.report->small);
            json certs = json::array();
            for (const auto& c : r.report->certificates) certs.push_back({{"name", c.name}, {"steps", c.steps}});
            e["certificates"] = std::move(certs);
        }
        arr.push_back(std::move(e));
    }
    return dump({{"command", "localization-check"}, {"results", std::move(arr)}});
}

} // namespace bwc
