// bwcohom command line front end.  Exit codes: 0 success, 1 law or
// verification failure, 2 validation failure, 3 parse, usage or I/O failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bwcohom/bwcomplex.hpp"
#include "bwcohom/laws.hpp"
#include "bwcohom/localization.hpp"
#include "bwcohom/reports.hpp"
#include "bwcohom/workspace.hpp"

namespace {

using namespace bwc;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;
constexpr int kParse = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads and refuses invalid workspaces with exit code 2.
bool load_valid(const std::string& file, Workspace& ws, int& code)
{
    ws = load_workspace(file);
    if (ws.valid()) return true;
    std::cerr << validation_report(ws, Format::human);
    code = kInvalid;
    return false;
}

void print_warnings(const CochainComplex& c)
{
    for (const auto& w : c.warnings()) std::cerr << "warning: " << w << "\n";
}

int emit(const std::string& text, const std::string& output)
{
    if (output.empty() || output == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << output << "\n";
        return kParse;
    }
    return kOk;
}

int cmd_validate(const std::string& file, Format format)
{
    Workspace ws = load_workspace(file);
    std::cout << validation_report(ws, format);
    return ws.valid() ? kOk : kInvalid;
}

int cmd_cohomology(const std::string& file, const std::vector<std::string>& targets, std::size_t max_degree,
                   bool degree_given, Format format)
{
    Workspace ws;
    int code = kOk;
    if (!load_valid(file, ws, code)) return code;

    struct Job {
        std::string category, system;
        std::size_t degree;
    };
    std::vector<Job> jobs;
    if (targets.empty()) {
        for (const auto& t : ws.tasks)
            if (t.command == "cohomology") jobs.push_back({t.category, t.system, degree_given ? max_degree : t.max_degree});
        if (jobs.empty()) throw UsageError("no system given and the workspace has no cohomology tasks");
    } else if (targets.size() == 1) {
        jobs.push_back({"", targets[0], max_degree});
    } else {
        jobs.push_back({targets[0], targets[1], max_degree});
    }

    std::vector<CohomologyResult> results;
    for (const auto& job : jobs) {
        const SystemPtr& d = ws.system(job.system);
        const std::string& category = ws.system_category.at(job.system);
        if (!job.category.empty() && job.category != category)
            throw UsageError("system '" + job.system + "' lives on '" + category + "', not '" + job.category + "'");
        auto complex = build_complex(d, job.degree);
        print_warnings(*complex);
        results.push_back({job.system, category, job.degree, job.degree ? cohomology_all(*complex) : std::vector<GroupInvariants>{}});
    }
    std::cout << cohomology_report(results, format);
    return kOk;
}

int cmd_check_laws(const LawConfig& config, const std::string& law, Format format)
{
    if (law != "all" && !is_law(law)) {
        std::string known;
        for (const auto& n : law_names()) known += " " + n;
        throw UsageError("unknown law '" + law + "'; known laws: all" + known);
    }
    auto results = run_laws(law, config);
    std::cout << law_report(results, config, format);
    for (const auto& r : results)
        if (!r.ok()) return kFailure;
    return kOk;
}

LocalizationResult check_localization(const Workspace& ws, const std::string& name, const std::string& system,
                                      std::size_t max_degree)
{
    LocalizationResult r;
    r.localization = name;
    r.system = system;
    r.max_degree = max_degree;
    const AnyLocalization& l = ws.localization(name);
    const SystemPtr& d = ws.system(system);
    r.colocal = std::holds_alternative<Colocalization>(l);
    const CatPtr& big = r.colocal ? std::get<Colocalization>(l).big : std::get<Localization>(l).big;
    if (!same_category(big, d->base()))
        throw UsageError("system '" + system + "' does not live on the big category of '" + name + "'");
    try {
        r.report = r.colocal ? verify_colocalization_theorem(d, std::get<Colocalization>(l), max_degree)
                             : verify_localization_theorem(d, std::get<Localization>(l), max_degree);
    } catch (const NotLocal& e) {
        r.status = LocalizationResult::Status::not_local;
        r.witness = e.witness();
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        r.status = LocalizationResult::Status::failed;
        r.message = e.what();
    }
    return r;
}

int cmd_localization_check(const std::string& file, const std::vector<std::string>& targets, std::size_t max_degree,
                           bool degree_given, Format format)
{
    Workspace ws;
    int code = kOk;
    if (!load_valid(file, ws, code)) return code;
    std::vector<LocalizationResult> results;
    if (targets.empty()) {
        for (const auto& t : ws.tasks)
            if (t.command == "localization-check")
                results.push_back(check_localization(ws, t.localization, t.system, degree_given ? max_degree : t.max_degree));
        if (results.empty()) throw UsageError("no localization given and the workspace has no localization-check tasks");
    } else if (targets.size() == 2) {
        results.push_back(check_localization(ws, targets[0], targets[1], max_degree));
    } else {
        throw UsageError("expected LOCALIZATION SYSTEM");
    }
    std::cout << localization_report(results, format);
    for (const auto& r : results)
        if (r.status != LocalizationResult::Status::pass) return kFailure;
    return kOk;
}

int cmd_export(const std::string& file, const std::string& target, const std::string& what, std::size_t max_degree,
               const std::string& output)
{
    Workspace ws;
    int code = kOk;
    if (!load_valid(file, ws, code)) return code;
    if (what == "workspace") return emit(export_workspace(ws), output);
    if (target.empty()) throw UsageError("export --what " + what + " needs a TARGET");
    if (what == "factorization") return emit(export_factorization(ws, target), output);
    if (what == "nerve") return emit(export_nerve(ws, target, max_degree), output);
    return emit(export_complex(ws, target, max_degree), output);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Baues-Wirsching cohomology of finite categories, exactly"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bwcohom 0.3.0");

    std::string file;
    std::string format_name = "human";
    std::size_t max_degree = 4;
    std::vector<std::string> targets;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    };

    auto* validate = app.add_subcommand("validate", "Load a workspace and report every violation");
    validate->add_option("file", file, "workspace file")->required();
    add_format(validate);

    auto* cohomology = app.add_subcommand("cohomology", "H^0..H^{N-1} of a natural system");
    cohomology->add_option("file", file, "workspace file")->required();
    cohomology->add_option("targets", targets, "[CATEGORY] SYSTEM; omit to run the file's cohomology tasks")
        ->expected(0, 2);
    auto* coh_degree = cohomology->add_option("--max-degree", max_degree, "N: report degrees 0..N-1");
    add_format(cohomology);

    LawConfig config;
    std::string law = "all";
    auto* laws = app.add_subcommand("check-laws", "Run the randomized law suites");
    laws->add_option("--seed", config.seed, "seed of the first case; case i uses seed + i");
    laws->add_option("--cases", config.cases, "instances per law");
    laws->add_option("--max-morphisms", config.max_morphisms, "bound on |Mor| of generated categories")
        ->check(CLI::PositiveNumber);
    laws->add_option("--max-degree", config.max_degree, "truncation degree N")->check(CLI::Range(1, 8));
    laws->add_option("--law", law, "law name or all");
    add_format(laws);

    auto* loc = app.add_subcommand("localization-check", "Verify the (co)localization theorem on a system");
    loc->add_option("file", file, "workspace file")->required();
    loc->add_option("targets", targets, "LOCALIZATION SYSTEM; omit to run the file's localization-check tasks")
        ->expected(0, 2);
    auto* loc_degree = loc->add_option("--max-degree", max_degree, "N: compare degrees 0..N-1");
    add_format(loc);

    std::string what;
    std::string target;
    std::string output;
    auto* exp = app.add_subcommand("export", "Write a complex, factorization category, nerve or canonical workspace");
    exp->add_option("file", file, "workspace file")->required();
    exp->add_option("target", target, "system (complex) or category (factorization, nerve)");
    exp->add_option("--what", what, "complex, factorization, nerve or workspace")
        ->required()
        ->check(CLI::IsMember({"complex", "factorization", "nerve", "workspace"}));
    exp->add_option("--max-degree", max_degree, "highest degree written");
    exp->add_option("--output,-o", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        const Format format = parse_format(format_name);
        if (*validate) return cmd_validate(file, format);
        if (*cohomology) return cmd_cohomology(file, targets, max_degree, coh_degree->count() > 0, format);
        if (*laws) return cmd_check_laws(config, law, format);
        if (*loc) return cmd_localization_check(file, targets, max_degree, loc_degree->count() > 0, format);
        if (*exp) return cmd_export(file, target, what, max_degree, output);
    } catch (const WorkspaceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const ValidationError& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kParse;
}
