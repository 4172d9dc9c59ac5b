#pragma once

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparse_powers/errors.hpp"

namespace sparse_powers {

// Sorted list of distinct vertex ids.
using VertexSet = std::vector<int>;

inline bool is_vertex_set(const VertexSet& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction; no self-loops, no parallel edges.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        Graph g;
        g.n = n;
        g.adj.assign(n, {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: vertex id out of range");
            if (u == v) throw std::invalid_argument("Graph: self-loop");
            g.adj[u].push_back(v);
            g.adj[v].push_back(u);
        }
        for (auto& nbrs : g.adj) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
        return g;
    }

    int degree(int u) const { return static_cast<int>(adj[u].size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
        const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        int t = adj[u].size() <= adj[v].size() ? v : u;
        return std::binary_search(a.begin(), a.end(), t);
    }

    long long edge_count() const {
        long long deg = 0;
        for (const auto& nbrs : adj) deg += static_cast<long long>(nbrs.size());
        return deg / 2;
    }

    bool operator==(const Graph&) const = default;
};

struct ParsedGraph {
    Graph graph;
    long long duplicate_edges = 0;
};

// Edge-list interchange format: one "u v" pair per line, '#' starts a
// comment line, blank lines ignored. Vertex ids are taken literally;
// ids missing from the file become isolated vertices.
inline ParsedGraph parse_graph(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<long long> nums;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') { ++i; continue; }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            long long value = 0;
            auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, value);
            if (ec != std::errc{} || p != line.data() + j || value < 0)
                throw format_error("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                                   std::string(line.substr(i, j - i)) + "'");
            nums.push_back(value);
            i = j;
        }
        if (nums.empty()) continue;
        if (nums.size() != 2)
            throw format_error("line " + std::to_string(line_no) + ": expected exactly two vertex ids");
        if (nums[0] == nums[1])
            throw format_error("line " + std::to_string(line_no) + ": self-loop " + std::to_string(nums[0]));
        if (nums[0] > 1'000'000'000 || nums[1] > 1'000'000'000)
            throw format_error("line " + std::to_string(line_no) + ": vertex id too large");
        edges.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
    }
    int n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
    ParsedGraph out;
    out.graph = Graph::from_edges(n, edges);
    out.duplicate_edges = static_cast<long long>(edges.size()) - out.graph.edge_count();
    return out;
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "# vertices " << g.n << " edges " << g.edge_count() << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) os << u << " " << v << "\n";
    return os.str();
}

// Distances from source; -1 where unreachable. A nonnegative cap stops
// the traversal at that depth (farther vertices stay -1).
inline std::vector<int> bfs_distances(const Graph& g, int source, int cap = -1) {
    if (source < 0 || source >= g.n) throw std::invalid_argument("bfs_distances: bad source");
    std::vector<int> dist(g.n, -1);
    dist[source] = 0;
    std::vector<int> frontier{source}, next;
    int depth = 0;
    while (!frontier.empty() && (cap < 0 || depth < cap)) {
        next.clear();
        for (int u : frontier)
            for (int v : g.adj[u])
                if (dist[v] < 0) {
                    dist[v] = depth + 1;
                    next.push_back(v);
                }
        frontier.swap(next);
        ++depth;
    }
    return dist;
}

// G^d: same vertices, edge uv iff 1 <= dist_G(u,v) <= d.
inline Graph power(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("power: d must be >= 1");
    Graph out;
    out.n = g.n;
    out.adj.assign(g.n, {});
    for (int u = 0; u < g.n; ++u) {
        auto dist = bfs_distances(g, u, d);
        for (int v = 0; v < g.n; ++v)
            if (v != u && dist[v] >= 1) out.adj[u].push_back(v);
    }
    return out;
}

struct InducedSubgraph {
    Graph graph;
    VertexSet vertices; // vertices[i] = id in the host graph of the new vertex i
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (!is_vertex_set(s, g.n))
        throw std::invalid_argument("induced_subgraph: not a valid vertex set of the host graph");
    std::vector<int> index(g.n, -1);
    for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
    InducedSubgraph out;
    out.vertices = s;
    out.graph.n = static_cast<int>(s.size());
    out.graph.adj.assign(s.size(), {});
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int v : g.adj[s[i]])
            if (index[v] >= 0) out.graph.adj[i].push_back(index[v]);
    return out;
}

struct Subdivision {
    Graph graph;
    std::vector<int> branch_vertex; // original id -> id in the subdivided graph (identity)
};

// Replace each edge with a path through k fresh internal vertices.
inline Subdivision subdivide(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("subdivide: k must be >= 0");
    Subdivision out;
    out.branch_vertex.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.branch_vertex[v] = v;
    if (k == 0) {
        out.graph = g;
        return out;
    }
    std::vector<std::pair<int, int>> edges;
    int next_id = g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            int prev = u;
            for (int t = 0; t < k; ++t) {
                edges.emplace_back(prev, next_id);
                prev = next_id++;
            }
            edges.emplace_back(prev, v);
        }
    out.graph = Graph::from_edges(next_id, edges);
    return out;
}

inline VertexSet universal_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == g.n - 1) out.push_back(v);
    return out;
}

} // namespace sparse_powers
