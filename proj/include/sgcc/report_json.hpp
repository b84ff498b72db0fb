#pragma once

#include <string>

#include "json.hpp"
#include "sgcc/cover.hpp"
#include "sgcc/oracle.hpp"

namespace sgcc {

/// Cover report with keys in a fixed order.
inline nlohmann::ordered_json to_json(const CoverReport& r) {
    nlohmann::ordered_json j;
    j["valid"] = r.valid;
    j["length"] = r.length;
    j["m"] = r.m;
    j["bound_23_9"] = r.bound_23_9;
    j["bound_26_9"] = r.bound_26_9;
    j["branch"] = r.branch;
    j["candidate"] = r.candidate;
    j["uncovered"] = r.uncovered;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [k, count] : r.histogram()) hist[std::to_string(k)] = count;
    j["coverage_histogram"] = hist;
    if (r.oracle_gap) j["oracle_gap"] = *r.oracle_gap;
    return j;
}

inline nlohmann::ordered_json to_json(const OracleResult& r) {
    nlohmann::ordered_json j;
    j["optimum"] = r.optimum;
    j["nodes"] = r.node_count;
    j["status"] = to_string(r.status);
    return j;
}

inline nlohmann::ordered_json to_json(const CdcResult& r) {
    nlohmann::ordered_json j;
    j["exists"] = to_string(r.exists);
    j["nodes"] = r.node_count;
    j["status"] = r.exists == Tristate::unknown ? "budget_exceeded" : "exact";
    return j;
}

}  // namespace sgcc
