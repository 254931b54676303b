#include "rigidity/report.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace rigidity;

namespace {

TestConfig cfg_for(int dim, int rounds = 5, std::uint64_t seed = 42) {
    TestConfig cfg;
    cfg.dim = dim;
    cfg.rounds = rounds;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("analyze fills the prism report") {
    Graph prism = generate(Family::prism, {});
    RigidityReport r = analyze(prism, cfg_for(2));
    CHECK(r.v == 6);
    CHECK(r.e == 9);
    CHECK(r.t == 9);
    CHECK(r.s == 3);
    CHECK(r.local.kind == VerdictKind::LocallyRigid);
    CHECK(r.global.kind == VerdictKind::NotGloballyRigid);
    CHECK(r.diagnostics.hendrickson == HendricksonCheck{true, false});
    CHECK(r.diagnostics.k_min == 6);  // only the zero stress exists
    CHECK(r.false_no_bound == r.global.false_no_bound);
    CHECK_FALSE(r.diagnostics.dim_one.has_value());
    CHECK(r.graph_hash == prism.canonical_hash());
}

TEST_CASE("dim-one oracle appears only for d = 1") {
    Graph c5 = generate(Family::cycle, {5});
    RigidityReport r = analyze(c5, cfg_for(1));
    REQUIRE(r.diagnostics.dim_one.has_value());
    CHECK(*r.diagnostics.dim_one);
    CHECK(r.global.kind == VerdictKind::GloballyRigid);
}

TEST_CASE("JSON round-trips losslessly") {
    for (auto family : {Family::prism, Family::complete}) {
        Graph g = family == Family::prism ? generate(family, {}) : generate(family, {4});
        RigidityReport r = analyze(g, cfg_for(2));
        RigidityReport back = report_from_json_string(to_json_string(r));
        CHECK(back == r);
    }
}

TEST_CASE("identical inputs give identical reports except wall time") {
    Graph k4 = generate(Family::complete, {4});
    RigidityReport a = analyze(k4, cfg_for(2, 8, 123));
    RigidityReport b = analyze(k4, cfg_for(2, 8, 123));
    CHECK(equal_ignoring_wall_time(a, b));

    // And the serialized bytes agree after erasing the wall-time field.
    auto ja = nlohmann::json::parse(to_json_string(a));
    auto jb = nlohmann::json::parse(to_json_string(b));
    ja.erase("wall_time_ms");
    jb.erase("wall_time_ms");
    CHECK(ja.dump() == jb.dump());

    RigidityReport c = analyze(k4, cfg_for(2, 8, 124));
    CHECK_FALSE(equal_ignoring_wall_time(a, c));  // seed is part of the input
}

TEST_CASE("unknown or missing JSON fields are rejected") {
    Graph k4 = generate(Family::complete, {4});
    std::string text = to_json_string(analyze(k4, cfg_for(2)));

    auto j = nlohmann::json::parse(text);
    j["surprise"] = 1;
    CHECK_THROWS_WITH_AS(report_from_json_string(j.dump()), doctest::Contains("unknown field"),
                         std::invalid_argument);

    auto j2 = nlohmann::json::parse(text);
    j2.erase("seed");
    CHECK_THROWS_WITH_AS(report_from_json_string(j2.dump()), doctest::Contains("missing field"),
                         std::invalid_argument);

    auto j3 = nlohmann::json::parse(text);
    j3["verdicts"]["local"]["kind"] = "Wobbly";
    CHECK_THROWS_AS(report_from_json_string(j3.dump()), std::invalid_argument);

    auto j4 = nlohmann::json::parse(text);
    j4["diagnostics"]["hendrickson"]["extra"] = true;
    CHECK_THROWS_AS(report_from_json_string(j4.dump()), std::invalid_argument);
}

TEST_CASE("config validation") {
    Graph k4 = generate(Family::complete, {4});
    TestConfig bad_dim = cfg_for(0);
    CHECK_THROWS_AS(analyze(k4, bad_dim), std::invalid_argument);
    TestConfig bad_rounds = cfg_for(2, 0);
    CHECK_THROWS_AS(analyze(k4, bad_rounds), std::invalid_argument);

    Graph k13 = generate(Family::complete, {13});
    TestConfig rational = cfg_for(2, 2);
    rational.mode = Mode::rational;
    CHECK_THROWS_AS(analyze(k13, rational), std::invalid_argument);
    rational.force = true;
    CHECK_NOTHROW(check_local(k13, 2, rational));
}

TEST_CASE("rational mode produces a full report") {
    Graph k4 = generate(Family::complete, {4});
    TestConfig cfg = cfg_for(2, 3);
    cfg.mode = Mode::rational;
    RigidityReport r = analyze(k4, cfg);
    CHECK(r.mode == "rational");
    CHECK(r.global.kind == VerdictKind::GloballyRigid);
    CHECK(r.diagnostics.k_min == 3);
    REQUIRE(!r.global.rounds.empty());
    CHECK_FALSE(r.global.rounds[0].prime.has_value());
    RigidityReport back = report_from_json_string(to_json_string(r));
    CHECK(back == r);
}

TEST_CASE("text rendering mentions the verdicts") {
    Graph prism = generate(Family::prism, {});
    std::string text = render_text(analyze(prism, cfg_for(2)));
    CHECK(text.find("LocallyRigid") != std::string::npos);
    CHECK(text.find("NotGloballyRigid") != std::string::npos);
    CHECK(text.find("hendrickson") != std::string::npos);
}
