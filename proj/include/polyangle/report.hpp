#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "polyangle/oracle.hpp"
#include "polyangle/polygonize.hpp"

namespace polyangle {

struct RunOptions {
    bool edgewise = true;
    bool onion = true;
    bool oracle = false;
    bool onion_global = false; // also report the global-hit peeling reading
    bool timings = false;      // wall-clock timings make reports non-reproducible; off by default
    std::uint64_t oracle_cap = kNoCap;
};

struct RunOutcome {
    nlohmann::json report;
    bool bounds_ok = true;
    std::optional<EdgewiseResult> edgewise;
    std::optional<OnionResult> onion;
};

// Runs the requested algorithms and assembles the versioned JSON report.
// With opt.timings off the report is byte-identical across reruns.
RunOutcome run_instance(const PointSet& s, const RunOptions& opt, const std::string& source);

// Angles rendered as "<rad> rad (<multiple> pi)" with nine decimals.
std::string format_angle(double rad);

std::string human_summary(const nlohmann::json& report);

} // namespace polyangle
