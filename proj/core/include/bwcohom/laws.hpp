#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bwc {

struct LawConfig {
    std::uint64_t seed = 1;
    std::size_t cases = 50;
    std::size_t max_morphisms = 6;
    std::size_t max_degree = 4;
};

/// Case i of a run uses seed S + i, so `--seed <seed> --cases 1` replays it.
struct LawFailure {
    std::uint64_t seed = 0;
    std::string instance;
    std::string message;
};

struct LawResult {
    std::string law;
    std::size_t passed = 0;
    std::size_t skipped = 0;
    std::vector<LawFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// dd, chain-map, functoriality, dh+hd, dr-rd, dr'-r'd, interchange,
/// relative-class, localization, colocalization, characterization.
const std::vector<std::string>& law_names();
bool is_law(const std::string& name);

/// Runs one law on `cases` instances.  Throws std::invalid_argument for an
/// unknown name.  Errors thrown by the library inside a case are recorded as
/// failures of that case, never propagated.
LawResult run_law(const std::string& law, const LawConfig& config);
/// `law` may be "all".
std::vector<LawResult> run_laws(const std::string& law, const LawConfig& config);

} // namespace bwc
