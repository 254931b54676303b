#ifndef RIGIDITY_REPORT_HPP
#define RIGIDITY_REPORT_HPP

#include "rigidity/config.hpp"
#include "rigidity/engine.hpp"
#include "rigidity/graph.hpp"

#include <optional>
#include <string>

namespace rigidity {

struct Diagnostics {
    std::optional<int> k_min;
    std::optional<int> k_sh;
    std::optional<long long> gauss_rank;
    std::optional<int> dot_space_dim;
    HendricksonCheck hendrickson;
    std::optional<bool> dim_one;  // 2-connectivity oracle, set when d == 1 and v >= 3

    bool operator==(const Diagnostics&) const = default;
};

// Full record of one analysis. Two runs with identical (graph, config)
// produce identical reports except wall_time_ms.
struct RigidityReport {
    int v = 0;
    int e = 0;
    std::string graph_hash;
    int d = 0;
    std::optional<long long> t;
    std::optional<long long> s;
    std::string mode;
    std::uint64_t seed = 0;
    int rounds = 0;
    Verdict local;
    Verdict global;
    Diagnostics diagnostics;
    std::string false_no_bound;  // bound attached to the global verdict
    double wall_time_ms = 0.0;

    bool globally_rigid() const { return global.kind == VerdictKind::GloballyRigid; }
    bool operator==(const RigidityReport&) const = default;
};

bool equal_ignoring_wall_time(const RigidityReport& a, const RigidityReport& b);

// Runs verdicts plus all diagnostics. Throws std::invalid_argument on an
// invalid config (see validate_config).
RigidityReport analyze(const Graph& g, const TestConfig& cfg);

// Fixed-schema JSON; parsing rejects unknown or missing fields.
std::string to_json_string(const RigidityReport& report, int indent = 2);
RigidityReport report_from_json_string(const std::string& text);

std::string render_text(const RigidityReport& report);

}  // namespace rigidity

#endif
