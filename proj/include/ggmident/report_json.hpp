#ifndef GGMIDENT_REPORT_JSON_HPP
#define GGMIDENT_REPORT_JSON_HPP

#include <json.hpp>

#include "ggmident/identify.hpp"

namespace ggmident {

/// Rule variants this implementation pins down, echoed into every report
/// so runs are auditable:
///   - isolation_conditioning: the all-neighbors isolation test conditions
///     on the candidate set plus the opposite endpoint of the pair;
///   - nonadjacency_size_bound: non-adjacency witnesses may use up to k
///     conditioning nodes (not exactly k);
///   - fvs_conditioning: the removal-candidate set F joins every
///     conditioning set, with size bounds applied beyond F;
///   - separator_padding: separators smaller than the nominal size are
///     accepted.
nlohmann::json interpretation_notes();

nlohmann::json to_json(const PairClassification& c);
nlohmann::json to_json(const OracleStats& s);

/// `command` is "check-degree" or "check-strong-sep"; `config_echo` and
/// `extra_notes` are merged in so callers can record flags, thresholds and
/// caveats.
nlohmann::json report_to_json(const IdentificationReport& report, const std::string& command,
                              const nlohmann::json& config_echo, const nlohmann::json& extra_notes);

nlohmann::json report_to_json(const FvsReport& report, const nlohmann::json& config_echo,
                              const nlohmann::json& extra_notes);

}  // namespace ggmident

#endif  // GGMIDENT_REPORT_JSON_HPP
