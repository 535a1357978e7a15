#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "bwcohom/localization.hpp"

namespace bwc {

/// Unreadable file, malformed JSON, schema mismatch or dangling reference.
/// `location` is "line L, column C" for syntax errors and a JSON pointer
/// otherwise.
class WorkspaceError : public Error {
public:
    WorkspaceError(const std::string& what, std::string location)
        : Error(location.empty() ? what : location + ": " + what), location_(std::move(location)) {}
    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

using AnyLocalization = std::variant<Localization, Colocalization>;

struct Task {
    std::string command; ///< cohomology | localization-check | export
    std::string system;
    std::string category;
    std::string localization;
    std::string what; ///< export target kind
    std::size_t max_degree = 4;
};

/// A loaded workspace.  Items that fail validation are left out of the maps
/// and their violations collected in `report`, prefixed by their JSON path.
struct Workspace {
    std::map<std::string, CatPtr> categories;
    std::map<std::string, Functor> functors;
    std::map<std::string, NaturalTransformation> transformations;
    std::map<std::string, SystemPtr> systems;
    std::map<std::string, std::string> system_category; ///< system -> its category
    std::map<std::string, AnyLocalization> localizations;
    std::vector<Task> tasks;
    ValidationReport report;

    // Names behind the references, for export.
    std::map<std::string, std::pair<std::string, std::string>> functor_ends;        ///< source, target category
    std::map<std::string, std::pair<std::string, std::string>> transformation_ends; ///< source, target functor
    struct LocalizationRefs {
        std::string big, small, phi, psi, alpha;
    };
    std::map<std::string, LocalizationRefs> localization_refs;

    bool valid() const noexcept { return report.ok(); }
    const CatPtr& category(const std::string& name) const;
    const SystemPtr& system(const std::string& name) const;
    const AnyLocalization& localization(const std::string& name) const;
};

inline constexpr const char* kWorkspaceFormat = "bwcohom-workspace";
inline constexpr int kWorkspaceVersion = 1;

/// Throws WorkspaceError; validation failures go to Workspace::report.
Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::filesystem::path& path);

/// Canonical JSON of every valid item, with builtins expanded and systems
/// written as full action tables.  Loading it back gives equal structures.
std::string export_workspace(const Workspace& ws);
/// FC as a workspace holding one category "F(<name>)", with an annotation
/// block mapping its objects and morphisms back to the base.
std::string export_factorization(const Workspace& ws, const std::string& category);
/// Chains of length 0..max_degree with degeneracy flags.
std::string export_nerve(const Workspace& ws, const std::string& category, std::size_t max_degree);
/// Bases, groups and differential matrices of F*(C, D) up to max_degree.
std::string export_complex(const Workspace& ws, const std::string& system, std::size_t max_degree);

} // namespace bwc
