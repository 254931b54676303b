// Command-line surface: check | gen | batch over edge-list graph files or
// inline "gen:" specs. Exit codes for check: 0 globally rigid, 1 not,
// 2 input error.

#include "rigidity/graph.hpp"
#include "rigidity/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty parameter in list");
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad parameter: " + item);
        out.push_back(value);
    }
    return out;
}

// A graph source is either a file path or an inline "gen:family:p1,p2" spec.
rigidity::Graph load_graph(const std::string& source) {
    if (source.rfind("gen:", 0) == 0) {
        std::string rest = source.substr(4);
        auto colon = rest.find(':');
        std::string family = colon == std::string::npos ? rest : rest.substr(0, colon);
        std::vector<int> params;
        if (colon != std::string::npos) params = parse_int_list(rest.substr(colon + 1));
        return rigidity::generate(rigidity::family_from_string(family), params);
    }
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open " + source);
    std::ostringstream text;
    text << in.rdbuf();
    return rigidity::parse_graph(text.str());
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

struct CommonFlags {
    rigidity::TestConfig cfg;
    std::string mode_str = "modular";
    bool json_output = false;
    std::string out_path;

    void attach(CLI::App* app) {
        app->add_option("--dim", cfg.dim, "ambient dimension d")->check(CLI::PositiveNumber);
        app->add_option("--rounds", cfg.rounds, "Monte Carlo rounds")->check(CLI::PositiveNumber);
        app->add_option("--seed", cfg.seed, "master seed");
        app->add_option("--mode", mode_str, "modular|rational")
            ->check(CLI::IsMember({"modular", "rational"}));
        app->add_flag("--json", json_output, "emit JSON instead of text");
        app->add_option("--out", out_path, "write the report to a file ('-' = stdout)");
        app->add_flag("--force", cfg.force, "allow rational mode on graphs with v > 12");
    }

    rigidity::TestConfig config() const {
        rigidity::TestConfig c = cfg;
        c.mode = rigidity::mode_from_string(mode_str);
        c.format = json_output ? rigidity::ReportFormat::json : rigidity::ReportFormat::text;
        return c;
    }
};

int run_check(const std::string& source, const CommonFlags& flags) {
    rigidity::Graph g;
    try {
        g = load_graph(source);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << source << ": " << ex.what() << "\n";
        return 2;
    }
    rigidity::TestConfig cfg = flags.config();
    rigidity::RigidityReport report;
    try {
        report = rigidity::analyze(g, cfg);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::string text = cfg.format == rigidity::ReportFormat::json
                           ? rigidity::to_json_string(report) + "\n"
                           : rigidity::render_text(report);
    write_output(text, flags.out_path);
    return report.globally_rigid() ? 0 : 1;
}

int run_gen(const std::string& family, const std::vector<std::string>& rest) {
    if (rest.empty()) {
        std::cerr << "error: gen needs an output path ('-' = stdout)\n";
        return 2;
    }
    try {
        std::vector<int> params;
        for (std::size_t i = 0; i + 1 < rest.size(); ++i) params.push_back(std::stoi(rest[i]));
        rigidity::Graph g = rigidity::generate(rigidity::family_from_string(family), params);
        write_output(g.to_edge_list(), rest.back());
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}

struct BatchEntry {
    std::string name;
    std::optional<rigidity::RigidityReport> report;
    std::string error;
};

int run_batch(const std::vector<std::string>& inputs, const CommonFlags& flags) {
    std::vector<std::string> files;
    if (inputs.size() == 1 && fs::is_directory(inputs[0])) {
        for (const auto& entry : fs::directory_iterator(inputs[0]))
            if (entry.is_regular_file()) files.push_back(entry.path().string());
    } else {
        files = inputs;
    }
    std::sort(files.begin(), files.end());

    rigidity::TestConfig cfg = flags.config();
    std::vector<std::future<BatchEntry>> pending;
    for (const auto& file : files)
        pending.push_back(std::async(std::launch::async, [file, cfg]() {
            BatchEntry entry;
            entry.name = file;
            try {
                rigidity::Graph g = load_graph(file);
                entry.report = rigidity::analyze(g, cfg);
            } catch (const std::exception& ex) {
                entry.error = ex.what();
            }
            return entry;
        }));

    std::vector<BatchEntry> entries;
    entries.reserve(pending.size());
    for (auto& f : pending) entries.push_back(f.get());
    // Completion order is irrelevant: output follows the sorted file list.

    std::ostringstream out;
    if (cfg.format == rigidity::ReportFormat::json) {
        json j;
        j["batch"] = json::array();
        for (const auto& entry : entries) {
            json item;
            item["file"] = entry.name;
            if (entry.report)
                item["report"] = json::parse(rigidity::to_json_string(*entry.report));
            else
                item["error"] = entry.error;
            j["batch"].push_back(item);
        }
        out << j.dump(2) << "\n";
    } else {
        int rigid = 0, flexible = 0, failed = 0;
        for (const auto& entry : entries) {
            if (!entry.report) {
                out << entry.name << ": error: " << entry.error << "\n";
                ++failed;
                continue;
            }
            out << entry.name << ": local=" << verdict_kind_name(entry.report->local.kind)
                << " global=" << verdict_kind_name(entry.report->global.kind) << "\n";
            (entry.report->globally_rigid() ? rigid : flexible) += 1;
        }
        out << "summary: " << entries.size() << " input(s), " << rigid << " globally rigid, "
            << flexible << " not, " << failed << " failed\n";
    }
    write_output(out.str(), flags.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generic rigidity tester: randomized local/global rigidity checks and "
                 "stress-kernel diagnostics for graphs in E^d"};
    app.require_subcommand(1);

    std::string check_input;
    CommonFlags check_flags;
    CLI::App* check = app.add_subcommand("check", "analyze one graph");
    check->add_option("input", check_input, "graph file or gen:family:params")->required();
    check_flags.attach(check);

    std::string gen_family;
    std::vector<std::string> gen_rest;
    CLI::App* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
    gen->add_option("family", gen_family, "complete|cycle|path|complete_bipartite|wheel|prism")
        ->required();
    gen->add_option("args", gen_rest, "family parameters followed by the output path");

    std::vector<std::string> batch_inputs;
    CommonFlags batch_flags;
    CLI::App* batch = app.add_subcommand("batch", "analyze a directory or list of graph files");
    batch->add_option("inputs", batch_inputs, "directory or graph files")->required();
    batch_flags.attach(batch);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(check_input, check_flags);
        if (gen->parsed()) return run_gen(gen_family, gen_rest);
        if (batch->parsed()) return run_batch(batch_inputs, batch_flags);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
