#include "rigidity/report.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace rigidity {

using nlohmann::json;

RigidityReport analyze(const Graph& g, const TestConfig& cfg) {
    validate_config(cfg, g.vertex_count());
    auto start = std::chrono::steady_clock::now();

    RigidityReport r;
    r.v = g.vertex_count();
    r.e = g.edge_count();
    r.graph_hash = g.canonical_hash();
    r.d = cfg.dim;
    r.mode = mode_name(cfg.mode);
    r.seed = cfg.seed;
    r.rounds = cfg.rounds;
    if (r.v >= cfg.dim + 1) {
        auto c = constants(r.v, cfg.dim);
        r.t = c.t;
        r.s = c.s;
    }

    r.local = check_local(g, cfg.dim, cfg);
    r.global = check_global(g, cfg.dim, cfg);
    r.false_no_bound = r.global.false_no_bound;

    r.diagnostics.k_min = k_min_estimate(g, cfg.dim, cfg);
    if (auto sh = k_sh_estimate(g, cfg.dim, cfg)) {
        r.diagnostics.k_sh = sh->k_sh;
        r.diagnostics.gauss_rank = sh->gauss_rank;
    }
    r.diagnostics.dot_space_dim = dot_space_estimate(g, cfg.dim, cfg);
    r.diagnostics.hendrickson = check_hendrickson(g, cfg.dim, cfg);
    if (cfg.dim == 1 && r.v >= 3) r.diagnostics.dim_one = check_dimension_one(g);

    auto stop = std::chrono::steady_clock::now();
    r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

bool equal_ignoring_wall_time(const RigidityReport& a, const RigidityReport& b) {
    RigidityReport c = b;
    c.wall_time_ms = a.wall_time_ms;
    return a == c;
}

namespace {

json round_to_json(const RoundRecord& r) {
    json j;
    j["round"] = r.round;
    j["prime"] = r.prime ? json(*r.prime) : json(nullptr);
    j["rank_dl"] = r.rank_dl ? json(*r.rank_dl) : json(nullptr);
    j["rank_e"] = r.rank_e ? json(*r.rank_e) : json(nullptr);
    j["rank_omega"] = r.rank_omega ? json(*r.rank_omega) : json(nullptr);
    j["rejected"] = r.rejected;
    return j;
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["kind"] = verdict_kind_name(v.kind);
    j["certainty"] = certainty_name(v.certainty);
    j["false_no_bound"] = v.false_no_bound;
    j["t"] = v.t ? json(*v.t) : json(nullptr);
    j["s"] = v.s ? json(*v.s) : json(nullptr);
    j["n_bound"] = v.n_bound;
    j["rounds"] = json::array();
    for (const auto& rec : v.rounds) j["rounds"].push_back(round_to_json(rec));
    return j;
}

// Strict field access: every key must exist, and no extras are tolerated,
// so serialized reports stay usable as frozen test fixtures.
void check_keys(const json& j, std::initializer_list<const char*> keys, const char* where) {
    if (!j.is_object()) throw std::invalid_argument(std::string(where) + ": expected object");
    for (const char* k : keys)
        if (!j.contains(k))
            throw std::invalid_argument(std::string(where) + ": missing field '" + k + "'");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known)
            throw std::invalid_argument(std::string(where) + ": unknown field '" + it.key() + "'");
    }
}

template <typename T>
std::optional<T> opt_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

RoundRecord round_from_json(const json& j) {
    check_keys(j, {"round", "prime", "rank_dl", "rank_e", "rank_omega", "rejected"}, "round");
    RoundRecord r;
    r.round = j["round"].get<int>();
    r.prime = opt_from<std::uint64_t>(j["prime"]);
    r.rank_dl = opt_from<int>(j["rank_dl"]);
    r.rank_e = opt_from<int>(j["rank_e"]);
    r.rank_omega = opt_from<int>(j["rank_omega"]);
    r.rejected = j["rejected"].get<bool>();
    return r;
}

Verdict verdict_from_json(const json& j) {
    check_keys(j, {"kind", "certainty", "false_no_bound", "t", "s", "n_bound", "rounds"},
               "verdict");
    Verdict v;
    v.kind = verdict_kind_from_string(j["kind"].get<std::string>());
    v.certainty = certainty_from_string(j["certainty"].get<std::string>());
    v.false_no_bound = j["false_no_bound"].get<std::string>();
    v.t = opt_from<long long>(j["t"]);
    v.s = opt_from<long long>(j["s"]);
    v.n_bound = j["n_bound"].get<std::uint64_t>();
    if (!j["rounds"].is_array()) throw std::invalid_argument("verdict: rounds must be an array");
    for (const auto& rec : j["rounds"]) v.rounds.push_back(round_from_json(rec));
    return v;
}

}  // namespace

std::string to_json_string(const RigidityReport& r, int indent) {
    json j;
    j["graph"] = {{"v", r.v}, {"e", r.e}, {"hash", r.graph_hash}};
    j["d"] = r.d;
    j["t"] = r.t ? json(*r.t) : json(nullptr);
    j["s"] = r.s ? json(*r.s) : json(nullptr);
    j["mode"] = r.mode;
    j["seed"] = r.seed;
    j["rounds"] = r.rounds;
    j["verdicts"] = {{"local", verdict_to_json(r.local)}, {"global", verdict_to_json(r.global)}};
    json diag;
    diag["k_min"] = r.diagnostics.k_min ? json(*r.diagnostics.k_min) : json(nullptr);
    diag["k_sh"] = r.diagnostics.k_sh ? json(*r.diagnostics.k_sh) : json(nullptr);
    diag["gauss_rank"] =
        r.diagnostics.gauss_rank ? json(*r.diagnostics.gauss_rank) : json(nullptr);
    diag["dot_space_dim"] =
        r.diagnostics.dot_space_dim ? json(*r.diagnostics.dot_space_dim) : json(nullptr);
    diag["hendrickson"] = {{"connectivity_ok", r.diagnostics.hendrickson.connectivity_ok},
                           {"redundant_ok", r.diagnostics.hendrickson.redundant_ok}};
    diag["dim_one"] = r.diagnostics.dim_one ? json(*r.diagnostics.dim_one) : json(nullptr);
    j["diagnostics"] = diag;
    j["false_no_bound"] = r.false_no_bound;
    j["wall_time_ms"] = r.wall_time_ms;
    return j.dump(indent);
}

RigidityReport report_from_json_string(const std::string& text) {
    json j = json::parse(text);
    check_keys(j,
               {"graph", "d", "t", "s", "mode", "seed", "rounds", "verdicts", "diagnostics",
                "false_no_bound", "wall_time_ms"},
               "report");
    check_keys(j["graph"], {"v", "e", "hash"}, "graph");
    check_keys(j["verdicts"], {"local", "global"}, "verdicts");
    check_keys(j["diagnostics"],
               {"k_min", "k_sh", "gauss_rank", "dot_space_dim", "hendrickson", "dim_one"},
               "diagnostics");
    check_keys(j["diagnostics"]["hendrickson"], {"connectivity_ok", "redundant_ok"},
               "hendrickson");

    RigidityReport r;
    r.v = j["graph"]["v"].get<int>();
    r.e = j["graph"]["e"].get<int>();
    r.graph_hash = j["graph"]["hash"].get<std::string>();
    r.d = j["d"].get<int>();
    r.t = opt_from<long long>(j["t"]);
    r.s = opt_from<long long>(j["s"]);
    r.mode = j["mode"].get<std::string>();
    mode_from_string(r.mode);  // validate
    r.seed = j["seed"].get<std::uint64_t>();
    r.rounds = j["rounds"].get<int>();
    r.local = verdict_from_json(j["verdicts"]["local"]);
    r.global = verdict_from_json(j["verdicts"]["global"]);
    r.diagnostics.k_min = opt_from<int>(j["diagnostics"]["k_min"]);
    r.diagnostics.k_sh = opt_from<int>(j["diagnostics"]["k_sh"]);
    r.diagnostics.gauss_rank = opt_from<long long>(j["diagnostics"]["gauss_rank"]);
    r.diagnostics.dot_space_dim = opt_from<int>(j["diagnostics"]["dot_space_dim"]);
    r.diagnostics.hendrickson.connectivity_ok =
        j["diagnostics"]["hendrickson"]["connectivity_ok"].get<bool>();
    r.diagnostics.hendrickson.redundant_ok =
        j["diagnostics"]["hendrickson"]["redundant_ok"].get<bool>();
    r.diagnostics.dim_one = opt_from<bool>(j["diagnostics"]["dim_one"]);
    r.false_no_bound = j["false_no_bound"].get<std::string>();
    r.wall_time_ms = j["wall_time_ms"].get<double>();
    return r;
}

namespace {

std::string opt_str(const std::optional<int>& x) { return x ? std::to_string(*x) : "n/a"; }
std::string opt_str(const std::optional<long long>& x) { return x ? std::to_string(*x) : "n/a"; }

}  // namespace

std::string render_text(const RigidityReport& r) {
    std::ostringstream out;
    out << "graph: v=" << r.v << " e=" << r.e << " hash=" << r.graph_hash << "\n";
    out << "config: d=" << r.d << " mode=" << r.mode << " seed=" << r.seed
        << " rounds=" << r.rounds << "\n";
    out << "constants: t=" << opt_str(r.t) << " s=" << opt_str(r.s) << "\n";
    out << "local: " << verdict_kind_name(r.local.kind) << " (" << certainty_name(r.local.certainty)
        << ", false_no_bound " << r.local.false_no_bound << ")\n";
    out << "global: " << verdict_kind_name(r.global.kind) << " ("
        << certainty_name(r.global.certainty) << ", false_no_bound " << r.global.false_no_bound
        << ")\n";
    out << "diagnostics: k_min=" << opt_str(r.diagnostics.k_min)
        << " k_sh=" << opt_str(r.diagnostics.k_sh)
        << " gauss_rank=" << opt_str(r.diagnostics.gauss_rank)
        << " dot_space_dim=" << opt_str(r.diagnostics.dot_space_dim) << "\n";
    out << "hendrickson: connectivity=" << (r.diagnostics.hendrickson.connectivity_ok ? "yes" : "no")
        << " redundant=" << (r.diagnostics.hendrickson.redundant_ok ? "yes" : "no") << "\n";
    if (r.diagnostics.dim_one)
        out << "dimension-one oracle (2-connected): " << (*r.diagnostics.dim_one ? "yes" : "no")
            << "\n";
    out << "wall_time_ms: " << r.wall_time_ms << "\n";
    return out.str();
}

}  // namespace rigidity
