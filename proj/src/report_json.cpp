#include "ggmident/report_json.hpp"

namespace ggmident {

using nlohmann::json;

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.first, e.second});
    return out;
}

}  // namespace

json interpretation_notes() {
    return {
        {"isolation_conditioning", "pair_set_plus_opposite_endpoint"},
        {"nonadjacency_size_bound", "at_most_k"},
        {"fvs_conditioning", "candidate_set_joins_every_conditioning_set"},
        {"separator_padding", "smaller_separators_accepted"},
    };
}

json to_json(const PairClassification& c) {
    json out{{"u", c.u}, {"v", c.v}, {"status", to_string(c.status)}};
    if (c.witness) {
        out["witness"] = c.witness->members();
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const OracleStats& s) {
    return {{"queries", s.queries}, {"wall_ms", s.wall_ms}};
}

json report_to_json(const IdentificationReport& report, const std::string& command,
                    const json& config_echo, const json& extra_notes) {
    json out;
    out["command"] = command;
    out["verdict"] = report.verdict;
    out["k"] = report.k;
    out["ell"] = report.ell ? json(*report.ell) : json(nullptr);
    out["recovered_edges"] = edges_to_json(report.recovered_edges);

    json hoods = json::object();
    for (const auto& [u, hood] : report.neighborhoods) hoods[std::to_string(u)] = hood.members();
    out["neighborhoods"] = hoods;
    out["unscreened_nodes"] = report.unscreened_nodes;

    json classes = json::array();
    for (const auto& c : report.classifications) classes.push_back(to_json(c));
    out["classifications"] = classes;

    out["oracle"] = to_json(report.stats);
    out["config"] = config_echo;
    json notes = interpretation_notes();
    for (const auto& [key, value] : extra_notes.items()) notes[key] = value;
    out["notes"] = notes;
    return out;
}

json report_to_json(const FvsReport& report, const json& config_echo, const json& extra_notes) {
    json out;
    out["command"] = "find-fvs";
    out["verdict"] = !report.qualifying.empty();
    out["k"] = report.k;
    out["ell"] = report.ell;

    json list = json::array();
    for (const auto& candidate : report.qualifying) {
        list.push_back({{"fvs", candidate.fvs.members()},
                        {"residual_edges", edges_to_json(candidate.residual_edges)}});
    }
    out["qualifying"] = list;

    out["oracle"] = to_json(report.stats);
    out["config"] = config_echo;
    json notes = interpretation_notes();
    for (const auto& [key, value] : extra_notes.items()) notes[key] = value;
    out["notes"] = notes;
    return out;
}

}  // namespace ggmident
