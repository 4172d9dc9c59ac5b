#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sparse_powers/graph.hpp"

namespace sparse_powers {

// Seeded generator with a fixed int-draw scheme so that identical seeds
// reproduce identical corpora across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [lo, hi] by modulo; the slight bias is irrelevant
    // for corpus generation and keeps the byte stream stable.
    int uniform_int(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("Rng::uniform_int: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n >= 3) edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// Star with the center at vertex 0.
inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

inline Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

inline Graph grid_graph(int rows, int cols) {
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, edges);
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);               // spokes
    }
    return Graph::from_edges(10, edges);
}

// Uniform attachment tree: vertex v hangs off a uniformly random earlier vertex.
inline Graph random_tree(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.uniform_int(0, v - 1), v);
    return Graph::from_edges(n, edges);
}

// Repeated edge sampling with rejection of self-loops and duplicates.
inline Graph random_graph_with_edges(int n, int m, Rng& rng) {
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges;
    long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    m = static_cast<int>(std::min<long long>(m, max_edges));
    while (static_cast<int>(edges.size()) < m) {
        int u = rng.uniform_int(0, n - 1);
        int v = rng.uniform_int(0, n - 1);
        if (u == v || seen[u][v]) continue;
        seen[u][v] = seen[v][u] = 1;
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

// Edge sampling that additionally rejects endpoints already at max_degree.
inline Graph random_bounded_degree_graph(int n, int m, int max_degree, Rng& rng) {
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    long long attempts = 0;
    long long attempt_budget = 50LL * n * std::max(m, 1);
    while (static_cast<int>(edges.size()) < m && attempts++ < attempt_budget) {
        int u = rng.uniform_int(0, n - 1);
        int v = rng.uniform_int(0, n - 1);
        if (u == v || seen[u][v] || deg[u] >= max_degree || deg[v] >= max_degree) continue;
        seen[u][v] = seen[v][u] = 1;
        ++deg[u];
        ++deg[v];
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

// K_k with every edge subdivided s times.
inline Graph subdivided_clique(int k, int s) { return subdivide(complete_graph(k), s).graph; }

} // namespace sparse_powers
