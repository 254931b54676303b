#include "rigidity/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <sstream>

namespace rigidity {

Graph::Graph(int v, std::vector<Edge> edges) : v_(v) {
    if (v < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& e : edges) {
        if (e.u > e.w) std::swap(e.u, e.w);
        if (e.u == e.w) throw std::invalid_argument("self-loop");
        if (e.u < 0 || e.w >= v) throw std::invalid_argument("endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
}

bool Graph::has_edge(int u, int w) const { return edge_index(u, w) >= 0; }

int Graph::edge_index(int u, int w) const {
    if (u > w) std::swap(u, w);
    Edge e{u, w};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::is_complete() const {
    return static_cast<long long>(edge_count()) * 2 == static_cast<long long>(v_) * (v_ - 1);
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(v_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.w);
        adj[e.w].push_back(e.u);
    }
    return adj;
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << v_ << ' ' << edges_.size() << '\n';
    for (const auto& e : edges_) out << e.u << ' ' << e.w << '\n';
    return out.str();
}

std::string Graph::canonical_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : to_edge_list()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

bool parse_int_token(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

bool is_skippable(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    long long v = -1, e = -1;
    int header_line = 0;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_skippable(line)) continue;
        auto toks = split_ws(line);
        if (v < 0) {
            long long a, b;
            if (toks.size() != 2 || !parse_int_token(toks[0], a) || !parse_int_token(toks[1], b) ||
                a < 0 || b < 0)
                throw ParseError(lineno, "malformed header, expected \"v e\"");
            if (a > 10'000'000 || b > 50'000'000)
                throw ParseError(lineno, "malformed header, counts too large");
            v = a;
            e = b;
            header_line = lineno;
            continue;
        }
        if (static_cast<long long>(edges.size()) >= e)
            throw ParseError(lineno, "unexpected data after " + std::to_string(e) + " edges");
        long long a, b;
        if (toks.size() != 2 || !parse_int_token(toks[0], a) || !parse_int_token(toks[1], b))
            throw ParseError(lineno, "malformed edge, expected \"u w\"");
        if (a < 0 || a >= v || b < 0 || b >= v) throw ParseError(lineno, "endpoint out of range");
        if (a == b) throw ParseError(lineno, "self-loop");
        Edge ed{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i] == ed)
                throw ParseError(lineno, "duplicate edge (first seen at line " +
                                             std::to_string(edge_lines[i]) + ")");
        edges.push_back(ed);
        edge_lines.push_back(lineno);
    }

    if (v < 0) throw ParseError(lineno == 0 ? 1 : lineno, "malformed header, missing \"v e\"");
    if (static_cast<long long>(edges.size()) != e)
        throw ParseError(header_line, "header promises " + std::to_string(e) + " edges, got " +
                                          std::to_string(edges.size()));
    return Graph(static_cast<int>(v), std::move(edges));
}

Family family_from_string(const std::string& name) {
    if (name == "complete") return Family::complete;
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "wheel") return Family::wheel;
    if (name == "prism") return Family::prism;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family family) {
    switch (family) {
        case Family::complete: return "complete";
        case Family::cycle: return "cycle";
        case Family::path: return "path";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::wheel: return "wheel";
        case Family::prism: return "prism";
    }
    throw std::invalid_argument("unknown family");
}

namespace {

void need_params(const std::vector<int>& params, std::size_t n, const char* family) {
    if (params.size() != n)
        throw std::invalid_argument(std::string(family) + " takes " + std::to_string(n) +
                                    " parameter(s)");
}

}  // namespace

Graph generate(Family family, const std::vector<int>& params) {
    std::vector<Edge> edges;
    switch (family) {
        case Family::complete: {
            need_params(params, 1, "complete");
            int n = params[0];
            if (n < 1) throw std::invalid_argument("complete needs n >= 1");
            for (int u = 0; u < n; ++u)
                for (int w = u + 1; w < n; ++w) edges.push_back({u, w});
            return Graph(n, std::move(edges));
        }
        case Family::cycle: {
            need_params(params, 1, "cycle");
            int n = params[0];
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
            return Graph(n, std::move(edges));
        }
        case Family::path: {
            need_params(params, 1, "path");
            int n = params[0];
            if (n < 1) throw std::invalid_argument("path needs n >= 1");
            for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
            return Graph(n, std::move(edges));
        }
        case Family::complete_bipartite: {
            need_params(params, 2, "complete_bipartite");
            int n = params[0], m = params[1];
            if (n < 1 || m < 1) throw std::invalid_argument("complete_bipartite needs n,m >= 1");
            for (int u = 0; u < n; ++u)
                for (int w = 0; w < m; ++w) edges.push_back({u, n + w});
            return Graph(n + m, std::move(edges));
        }
        case Family::wheel: {
            need_params(params, 1, "wheel");
            int n = params[0];
            if (n < 3) throw std::invalid_argument("wheel needs n >= 3");
            for (int u = 0; u < n; ++u) {
                edges.push_back({u, (u + 1) % n});
                edges.push_back({u, n});
            }
            return Graph(n + 1, std::move(edges));
        }
        case Family::prism: {
            need_params(params, 0, "prism");
            edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
            return Graph(6, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown family");
}

Graph delete_edge(const Graph& g, int u, int w) {
    if (!g.has_edge(u, w))
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(w) +
                                    ") absent");
    if (u > w) std::swap(u, w);
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (const auto& e : g.edges())
        if (!(e.u == u && e.w == w)) edges.push_back(e);
    return Graph(g.vertex_count(), std::move(edges));
}

bool is_connected(const Graph& g) {
    int v = g.vertex_count();
    if (v <= 1) return true;
    auto adj = g.adjacency_lists();
    std::vector<char> seen(v, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                q.push(y);
            }
    }
    return reached == v;
}

namespace {

// Max vertex-disjoint u-w paths, computed as unit-capacity max flow on the
// split-vertex digraph; stops once `limit` paths are found.
int vertex_disjoint_paths(const Graph& g, int source, int sink, int limit) {
    int v = g.vertex_count();
    // Node 2x = x_in, 2x+1 = x_out; cap 1 on in->out except at endpoints.
    int n = 2 * v;
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> net(n);
    auto add_arc = [&](int a, int b, int cap) {
        net[a].push_back({b, static_cast<int>(net[b].size()), cap});
        net[b].push_back({a, static_cast<int>(net[a].size()) - 1, 0});
    };
    for (int x = 0; x < v; ++x) add_arc(2 * x, 2 * x + 1, (x == source || x == sink) ? limit : 1);
    for (const auto& e : g.edges()) {
        add_arc(2 * e.u + 1, 2 * e.w, 1);
        add_arc(2 * e.w + 1, 2 * e.u, 1);
    }
    int s = 2 * source + 1, t = 2 * sink;
    int flow = 0;
    while (flow < limit) {
        // BFS for an augmenting path.
        std::vector<std::pair<int, int>> pred(n, {-1, -1});
        std::queue<int> q;
        q.push(s);
        pred[s] = {s, -1};
        while (!q.empty() && pred[t].first < 0) {
            int x = q.front();
            q.pop();
            for (std::size_t i = 0; i < net[x].size(); ++i) {
                const Arc& a = net[x][i];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {x, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (pred[t].first < 0) break;
        for (int x = t; x != s;) {
            auto [px, pi] = pred[x];
            net[px][pi].cap -= 1;
            net[x][net[px][pi].rev].cap += 1;
            x = px;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int v = g.vertex_count();
    if (v <= k) return false;
    if (g.is_complete()) return true;  // no vertex cut exists at all
    // Menger: the connectivity equals the minimum over non-adjacent pairs of
    // the max number of internally disjoint paths.
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w) {
            if (g.has_edge(u, w)) continue;
            if (vertex_disjoint_paths(g, u, w, k) < k) return false;
        }
    return true;
}

}  // namespace rigidity
