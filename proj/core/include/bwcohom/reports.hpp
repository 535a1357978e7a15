#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bwcohom/laws.hpp"
#include "bwcohom/workspace.hpp"

namespace bwc {

/// human: one line per result, groups as "Z/2" or "Z^2⊕Z/4".
/// machine: JSON with sorted keys, byte-stable for equal inputs.
enum class Format { human, machine };

/// "human" or "machine"; throws std::invalid_argument.
Format parse_format(const std::string& s);

struct CohomologyResult {
    std::string system;
    std::string category;
    std::size_t max_degree = 0;
    std::vector<GroupInvariants> groups; ///< H^0 .. H^{N-1}
};

/// human: "H0=Z H1=0 H2=Z/2 H3=0"
std::string cohomology_report(const std::vector<CohomologyResult>& results, Format format);

/// Violations of a loaded workspace, or a summary of what it holds.
std::string validation_report(const Workspace& ws, Format format);

std::string law_report(const std::vector<LawResult>& results, const LawConfig& config, Format format);

struct LocalizationResult {
    enum class Status { pass, not_local, failed };
    std::string localization;
    std::string system;
    bool colocal = false;
    std::size_t max_degree = 0;
    Status status = Status::pass;
    std::optional<TheoremReport> report; ///< set on pass
    std::string witness;                 ///< failing morphism when not local
    std::string message;                 ///< error text otherwise
};

std::string localization_report(const std::vector<LocalizationResult>& results, Format format);

} // namespace bwc
