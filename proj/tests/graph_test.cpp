#include "rigidity/graph.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace rigidity;

TEST_CASE("parse_graph reads a triangle") {
    Graph g = parse_graph("3 3\n0 1\n0 2\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("parse_graph canonicalizes edge order") {
    Graph g = parse_graph("2 1\n1 0");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("parse_graph accepts comments and blank lines") {
    Graph g = parse_graph("# a triangle\n\n3 3\n0 1\n# middle\n0 2\n1 2\n");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("parse_graph reports the offending line") {
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 0"), doctest::Contains("self-loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("oops\n0 1"), doctest::Contains("malformed header"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 5"), doctest::Contains("out of range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1\n1 0"), doctest::Contains("duplicate"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 1\n1 2"), doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 4\n0 1\n1 2"), ParseError);  // fewer edges than promised
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("generators produce the documented sizes") {
    CHECK(generate(Family::complete, {4}).edge_count() == 6);
    CHECK(generate(Family::complete, {4}).vertex_count() == 4);
    // K_{5,5}: 25 edges in all
    Graph k55 = generate(Family::complete_bipartite, {5, 5});
    CHECK(k55.vertex_count() == 10);
    CHECK(k55.edge_count() == 25);
    Graph prism = generate(Family::prism, {});
    CHECK(prism.vertex_count() == 6);
    CHECK(prism.edge_count() == 9);
    CHECK(prism.has_edge(0, 3));
    CHECK(prism.has_edge(1, 4));
    CHECK(prism.has_edge(2, 5));
    CHECK(generate(Family::cycle, {5}).edge_count() == 5);
    CHECK(generate(Family::path, {3}).edge_count() == 2);
    Graph w5 = generate(Family::wheel, {5});
    CHECK(w5.vertex_count() == 6);
    CHECK(w5.edge_count() == 10);
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(generate(Family::complete, {0}), std::invalid_argument);
    CHECK_THROWS_AS(generate(Family::cycle, {2}), std::invalid_argument);
    CHECK_THROWS_AS(generate(Family::complete_bipartite, {5}), std::invalid_argument);
    CHECK_THROWS_AS(generate(Family::complete_bipartite, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(generate(Family::prism, {1}), std::invalid_argument);
}

TEST_CASE("regeneration is deterministic and round-trips through the writer") {
    for (auto family : {Family::complete, Family::cycle, Family::wheel}) {
        Graph a = generate(family, {5});
        Graph b = generate(family, {5});
        CHECK(a == b);
        CHECK(parse_graph(a.to_edge_list()) == a);
    }
    Graph k23 = generate(Family::complete_bipartite, {2, 3});
    CHECK(parse_graph(k23.to_edge_list()) == k23);
    CHECK(k23.canonical_hash() == generate(Family::complete_bipartite, {2, 3}).canonical_hash());
}

TEST_CASE("delete_edge") {
    Graph k3 = generate(Family::complete, {3});
    Graph p3 = delete_edge(k3, 0, 1);
    CHECK(p3.edge_count() == 2);
    CHECK(p3 == Graph(3, {{0, 2}, {1, 2}}));

    Graph prism = generate(Family::prism, {});
    CHECK(delete_edge(prism, 0, 3).edge_count() == 8);
    CHECK(delete_edge(prism, 0, 3).vertex_count() == 6);

    CHECK_THROWS_AS(delete_edge(k3, 0, 3), std::invalid_argument);
}

TEST_CASE("delete then re-add restores the graph") {
    SplitRng rng(2024);
    for (int i = 0; i < 20; ++i) {
        Graph g = test_util::random_connected_graph(rng, 3 + static_cast<int>(rng.uniform(0, 5)));
        if (g.edge_count() == 0) continue;
        Edge e = g.edges()[rng.uniform(0, g.edge_count() - 1)];
        Graph smaller = delete_edge(g, e.u, e.w);
        auto edges = smaller.edges();
        edges.push_back(e);
        CHECK(Graph(g.vertex_count(), edges) == g);
    }
}

TEST_CASE("vertex connectivity fixtures") {
    CHECK(vertex_connectivity_at_least(generate(Family::complete_bipartite, {5, 5}), 4));
    CHECK_FALSE(vertex_connectivity_at_least(generate(Family::path, {3}), 2));
    CHECK(vertex_connectivity_at_least(generate(Family::complete, {4}), 3));
    // v > k is required even for complete graphs
    CHECK_FALSE(vertex_connectivity_at_least(generate(Family::complete, {3}), 3));
    CHECK(vertex_connectivity_at_least(generate(Family::prism, {}), 3));
    CHECK_FALSE(vertex_connectivity_at_least(generate(Family::prism, {}), 4));
    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(vertex_connectivity_at_least(disconnected, 1));
    CHECK(is_connected(generate(Family::prism, {})));
    CHECK_FALSE(is_connected(disconnected));
}

TEST_CASE("vertex connectivity agrees with subset-deletion brute force on v <= 8") {
    SplitRng rng(77);
    for (int i = 0; i < 40; ++i) {
        int v = 3 + static_cast<int>(rng.uniform(0, 5));
        Graph g = test_util::random_connected_graph(rng, v, 40);
        for (int k = 1; k <= v; ++k) {
            CAPTURE(g.to_edge_list());
            CAPTURE(k);
            CHECK(vertex_connectivity_at_least(g, k) ==
                  test_util::connectivity_at_least_brute(g, k));
        }
    }
    // Also some graphs with cut vertices.
    SplitRng rng2(78);
    for (int i = 0; i < 10; ++i) {
        Graph g = test_util::random_connected_graph(rng2, 7, 0);  // trees
        for (int k = 1; k <= 3; ++k)
            CHECK(vertex_connectivity_at_least(g, k) ==
                  test_util::connectivity_at_least_brute(g, k));
    }
}
