#ifndef RIGIDITY_GRAPH_HPP
#define RIGIDITY_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigidity {

// Undirected edge, stored canonically with u < w.
struct Edge {
    int u = 0;
    int w = 0;
    auto operator<=>(const Edge&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph on vertices 0..v-1. Edges are canonicalized
// (u < w) and kept sorted lexicographically; that order defines matrix
// row order everywhere else in the library.
class Graph {
public:
    Graph() = default;
    Graph(int v, std::vector<Edge> edges);

    int vertex_count() const { return v_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int w) const;
    // Index of {u,w} in the canonical edge order, or -1.
    int edge_index(int u, int w) const;

    bool is_complete() const;
    std::vector<std::vector<int>> adjacency_lists() const;

    // Canonical edge-list serialization: "v e" header then sorted "u w" lines.
    std::string to_edge_list() const;
    // FNV-1a 64 over the canonical serialization, as 16 hex digits.
    std::string canonical_hash() const;

    bool operator==(const Graph&) const = default;

private:
    int v_ = 0;
    std::vector<Edge> edges_;
};

// Parses the edge-list format: optional '#' comment lines, a "v e" header,
// then exactly e lines "u w". Throws ParseError with the offending line.
Graph parse_graph(const std::string& text);

enum class Family { complete, cycle, path, complete_bipartite, wheel, prism };

Family family_from_string(const std::string& name);
std::string family_name(Family family);

// Deterministic labeled generators for the example families.
Graph generate(Family family, const std::vector<int>& params);

// New graph with one edge removed; throws std::invalid_argument if absent.
Graph delete_edge(const Graph& g, int u, int w);

bool is_connected(const Graph& g);

// Exact check via Menger/max-flow: no set of fewer than k vertices
// disconnects g (requires v > k).
bool vertex_connectivity_at_least(const Graph& g, int k);

}  // namespace rigidity

#endif
