#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sparse_powers/cliques.hpp"
#include "sparse_powers/errors.hpp"
#include "sparse_powers/graph.hpp"
#include "sparse_powers/ordering.hpp"

namespace sparse_powers {

namespace detail {

inline bool k_colorable(const Graph& h, const std::vector<int>& order, int k) {
    std::vector<int> color(h.n, -1);
    auto rec = [&](auto&& self, std::size_t index, int used) -> bool {
        if (index == order.size()) return true;
        int v = order[index];
        int limit = std::min(k, used + 1);
        for (int q = 0; q < limit; ++q) {
            bool free = true;
            for (int w : h.adj[v])
                if (color[w] == q) { free = false; break; }
            if (!free) continue;
            color[v] = q;
            if (self(self, index + 1, std::max(used, q + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace detail

// Exact chromatic number: iterative deepening from the clique lower bound,
// with vertices assigned along the degeneracy ordering (dense core first).
inline int exact_chromatic(const Graph& h, int limit = 18) {
    if (h.n > limit)
        throw size_error("exact_chromatic: graph has " + std::to_string(h.n) +
                         " vertices, limit is " + std::to_string(limit));
    if (h.n == 0) return 0;
    auto deg = degeneracy_ordering(h);
    int lower = static_cast<int>(max_clique_exact(h).size());
    int upper = greedy_color(h, deg.ordering).palette;
    for (int k = lower; k < upper; ++k)
        if (detail::k_colorable(h, deg.ordering.sequence, k)) return k;
    return upper;
}

struct SandwichReport {
    int omega = 0;
    int chi = 0;
    int col = 0;
    bool ok = false; // omega <= chi <= col
};

inline SandwichReport check_sandwich(const Graph& h, int chi_limit = 18) {
    if (h.n == 0) throw std::invalid_argument("check_sandwich: empty graph");
    SandwichReport report;
    report.omega = static_cast<int>(max_clique_exact(h).size());
    report.chi = exact_chromatic(h, chi_limit);
    report.col = degeneracy_ordering(h).coloring_number;
    report.ok = report.omega <= report.chi && report.chi <= report.col;
    return report;
}

struct GeneralBoundsReport {
    int d = 0;
    int chi = 0;
    int omega = 0;
    long long bound = 0; // omega^2 for even d, omega^3 for odd d
    bool ok = false;
};

// chi(G^d) <= omega(G^d)^2 for even d and <= omega(G^d)^3 for odd d >= 3.
inline GeneralBoundsReport check_general_bounds(const Graph& g, int d, int chi_limit = 18) {
    if (d < 2) throw std::invalid_argument("check_general_bounds: d must be >= 2");
    Graph h = power(g, d);
    GeneralBoundsReport report;
    report.d = d;
    report.omega = static_cast<int>(max_clique_exact(h).size());
    report.chi = exact_chromatic(h, chi_limit);
    long long w = report.omega;
    report.bound = d % 2 == 0 ? w * w : w * w * w;
    report.ok = report.chi <= report.bound;
    return report;
}

// Rooted forest over the vertices of a host graph; parent[v] == -1 marks a
// root. Valid for the host when every edge joins an ancestor-descendant
// pair; the depth (in vertices) then bounds the host's treedepth.
struct EliminationForest {
    std::vector<int> parent;
};

struct ForestValidation {
    bool valid = false;
    int depth = 0;
};

inline ForestValidation validate_elimination_forest(const Graph& h, const EliminationForest& f) {
    if (static_cast<int>(f.parent.size()) != h.n)
        throw std::invalid_argument("validate_elimination_forest: forest does not cover the graph");
    std::vector<int> depth(h.n, 0);
    // resolve depths iteratively, rejecting cycles and bad parent ids
    auto resolve = [&](int v) {
        std::vector<int> chain;
        int cur = v;
        while (cur != -1 && depth[cur] == 0) {
            if (cur < 0 || cur >= h.n || f.parent[cur] == cur)
                throw std::invalid_argument("validate_elimination_forest: malformed parent");
            chain.push_back(cur);
            cur = f.parent[cur];
            if (static_cast<int>(chain.size()) > h.n)
                throw std::invalid_argument("validate_elimination_forest: parent cycle");
        }
        int base = cur == -1 ? 0 : depth[cur];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++base;
    };
    for (int v = 0; v < h.n; ++v) {
        if (f.parent[v] < -1 || f.parent[v] >= h.n)
            throw std::invalid_argument("validate_elimination_forest: parent id out of range");
        resolve(v);
    }

    ForestValidation out;
    out.depth = 0;
    for (int v = 0; v < h.n; ++v) out.depth = std::max(out.depth, depth[v]);
    out.valid = true;
    for (int u = 0; u < h.n && out.valid; ++u)
        for (int v : h.adj[u]) {
            if (v < u) continue;
            // walk the deeper endpoint up to the other's depth and compare
            int a = u, b = v;
            if (depth[a] < depth[b]) std::swap(a, b);
            while (depth[a] > depth[b]) a = f.parent[a];
            if (a != b) {
                out.valid = false;
                break;
            }
        }
    return out;
}

} // namespace sparse_powers
