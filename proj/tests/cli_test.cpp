#include "rigidity/graph.hpp"
#include "rigidity/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(RIGIDITY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("rigidity_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

}  // namespace

TEST_CASE("check on a generated prism") {
    CliResult r = run_cli("check gen:prism --dim 2 --rounds 6 --seed 1 --json");
    CHECK(r.exit_code == 1);  // not globally rigid
    json j = json::parse(r.out);
    CHECK(j["verdicts"]["local"]["kind"] == "LocallyRigid");
    CHECK(j["verdicts"]["global"]["kind"] == "NotGloballyRigid");
    CHECK(j["diagnostics"]["hendrickson"]["connectivity_ok"] == true);
    CHECK(j["diagnostics"]["hendrickson"]["redundant_ok"] == false);
    // The JSON output is a parseable report.
    rigidity::RigidityReport report = rigidity::report_from_json_string(r.out);
    CHECK(report.e == 9);
}

TEST_CASE("check K_{5,5} in three dimensions") {
    CliResult r = run_cli("check gen:complete_bipartite:5,5 --dim 3 --rounds 6 --seed 1 --json");
    CHECK(r.exit_code == 1);
    json j = json::parse(r.out);
    CHECK(j["verdicts"]["global"]["kind"] == "NotGloballyRigid");
    CHECK(j["diagnostics"]["k_min"] == 8);
}

TEST_CASE("check exit codes") {
    CHECK(run_cli("check gen:complete:4 --dim 2 --rounds 6").exit_code == 0);
    CHECK(run_cli("check missing.txt --dim 2").exit_code == 2);
    CHECK(run_cli("check gen:nonsense:1").exit_code == 2);
}

TEST_CASE("gen writes canonical edge lists") {
    TempDir dir;
    fs::path out = dir.path / "c5.g";
    CHECK(run_cli("gen cycle 5 " + out.string()).exit_code == 0);
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    rigidity::Graph g = rigidity::parse_graph(text);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(text == g.to_edge_list());

    CliResult k4 = run_cli("gen complete 4 -");
    CHECK(k4.exit_code == 0);
    CHECK(rigidity::parse_graph(k4.out).edge_count() == 6);

    CliResult prism = run_cli("gen prism -");
    CHECK(prism.exit_code == 0);
    CHECK(rigidity::parse_graph(prism.out).edge_count() == 9);

    CHECK(run_cli("gen cycle 2 -").exit_code == 2);
}

TEST_CASE("batch over a directory") {
    TempDir dir;
    write_file(dir.path / "a_k4.g", rigidity::generate(rigidity::Family::complete, {4}).to_edge_list());
    write_file(dir.path / "b_prism.g", rigidity::generate(rigidity::Family::prism, {}).to_edge_list());
    write_file(dir.path / "c_tripod.g",
               rigidity::generate(rigidity::Family::complete_bipartite, {1, 3}).to_edge_list());

    CliResult r = run_cli("batch " + dir.path.string() + " --dim 2 --rounds 6 --seed 3 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["batch"].size() == 3);
    CHECK(j["batch"][0]["report"]["verdicts"]["global"]["kind"] == "GloballyRigid");
    CHECK(j["batch"][1]["report"]["verdicts"]["global"]["kind"] == "NotGloballyRigid");
    CHECK(j["batch"][1]["report"]["verdicts"]["local"]["kind"] == "LocallyRigid");
    CHECK(j["batch"][2]["report"]["verdicts"]["local"]["kind"] == "NotLocallyRigid");
}

TEST_CASE("batch flags malformed files and keeps going") {
    TempDir dir;
    write_file(dir.path / "bad.g", "2 1\n0 0\n");
    write_file(dir.path / "good.g", rigidity::generate(rigidity::Family::complete, {4}).to_edge_list());
    CliResult r = run_cli("batch " + dir.path.string() + " --dim 2 --rounds 4 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["batch"].size() == 2);
    CHECK(j["batch"][0].contains("error"));
    CHECK(j["batch"][1].contains("report"));
}

TEST_CASE("batch over an empty directory") {
    TempDir dir;
    CliResult r = run_cli("batch " + dir.path.string() + " --dim 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 input(s)") != std::string::npos);
}

TEST_CASE("batch accepts an explicit file list") {
    TempDir dir;
    write_file(dir.path / "x.g", rigidity::generate(rigidity::Family::cycle, {4}).to_edge_list());
    write_file(dir.path / "y.g", rigidity::generate(rigidity::Family::path, {4}).to_edge_list());
    CliResult r = run_cli("batch " + (dir.path / "x.g").string() + " " +
                          (dir.path / "y.g").string() + " --dim 1 --rounds 5 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["batch"].size() == 2);
    CHECK(j["batch"][0]["report"]["verdicts"]["global"]["kind"] == "GloballyRigid");
    CHECK(j["batch"][1]["report"]["verdicts"]["global"]["kind"] == "NotGloballyRigid");
}

TEST_CASE("repeated runs are byte-identical apart from wall time") {
    CliResult a = run_cli("check gen:prism --dim 2 --rounds 5 --seed 9 --json");
    CliResult b = run_cli("check gen:prism --dim 2 --rounds 5 --seed 9 --json");
    json ja = json::parse(a.out);
    json jb = json::parse(b.out);
    ja.erase("wall_time_ms");
    jb.erase("wall_time_ms");
    CHECK(ja.dump() == jb.dump());
}
