#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sparse_powers/clustering.hpp"
#include "sparse_powers/errors.hpp"
#include "sparse_powers/graph.hpp"
#include "sparse_powers/ordering.hpp"

namespace sparse_powers {

// Coloring whose classes induce disjoint unions of cliques in the target
// graph (equivalently, no monochromatic induced 3-vertex path).
struct SubColoring {
    std::vector<int> color;
    int palette = 0;
    std::string method;
};

// Greedy weak d-coloring: in order, each vertex takes the least color not
// used on the rest of its WReach_d set. Any two distinct vertices where one
// weakly d-reaches the other end up with different colors.
inline std::vector<int> lambda_weak_coloring(const Graph& g, const VertexOrdering& o, int d) {
    if (d < 1) throw std::invalid_argument("lambda_weak_coloring: d must be >= 1");
    auto sets = weak_reach_sets(g, o, d);
    std::vector<int> color(g.n, -1);
    std::vector<char> used;
    for (int rank = 0; rank < g.n; ++rank) {
        int u = o.sequence[rank];
        used.assign(sets[u].size() + 1, 0);
        for (int v : sets[u]) {
            if (v == u) continue;
            int c = color[v];
            if (c >= 0 && c < static_cast<int>(used.size())) used[c] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        color[u] = c;
    }
    return color;
}

// Color the quotient of G^d greedily along its degeneracy ordering and give
// every vertex its block's color. The palette never exceeds wcol_{2d}(G, o).
inline SubColoring subcolor_via_quotient(const Graph& g, const VertexOrdering& o, int d) {
    if (d < 1) throw std::invalid_argument("subcolor_via_quotient: d must be >= 1");
    SubColoring out;
    out.method = "quotient";
    if (g.n == 0) return out;
    Graph gd = power(g, d);
    Clustering x = build_clustering(g, o, d);
    QuotientGraph q = quotient(gd, x);
    auto deg = degeneracy_ordering(q.graph);
    auto block_colors = greedy_color(q.graph, deg.ordering);
    out.color.resize(g.n);
    for (int v = 0; v < g.n; ++v) out.color[v] = block_colors.color[x.block_of[v]];
    out.palette = block_colors.palette;
    return out;
}

namespace detail {

// sort a vertex set by rank
inline std::vector<int> by_rank(VertexSet s, const VertexOrdering& o) {
    std::sort(s.begin(), s.end(), [&](int a, int b) { return o.position[a] < o.position[b]; });
    return s;
}

} // namespace detail

// Subcoloring of G^d from the triple (alpha, beta, gamma) attached to each
// vertex u over x_1 < ... < x_p = WReach_{floor(d/2)}[u] sorted by rank:
//   alpha(i)   = lambda color of x_i,
//   beta(i)    = least radius at which u weakly reaches x_i,
//   gamma(i,j) = index of x_i inside the rank-sorted WReach_d[x_j], i < j.
// Vertices sharing a triple induce a cluster graph in G^d; each distinct
// triple becomes one color, assigned in first-seen order along the ordering.
inline SubColoring xi_subcolor(const Graph& g, const VertexOrdering& o, int d) {
    if (d < 1) throw std::invalid_argument("xi_subcolor: d must be >= 1");
    SubColoring out;
    out.method = "xi";
    if (d == 1) {
        // lambda itself is a proper coloring of G, hence a subcoloring
        out.color = lambda_weak_coloring(g, o, 1);
        for (int c : out.color) out.palette = std::max(out.palette, c + 1);
        return out;
    }

    auto lambda = lambda_weak_coloring(g, o, d);
    auto half_sets = weak_reach_sets(g, o, d / 2);
    auto full_sets = weak_reach_sets(g, o, d);
    std::vector<std::vector<int>> full_by_rank(g.n);
    for (int v = 0; v < g.n; ++v) full_by_rank[v] = detail::by_rank(full_sets[v], o);

    out.color.assign(g.n, -1);
    std::map<std::vector<int>, int> palette_of_triple;
    for (int rank = 0; rank < g.n; ++rank) {
        int u = o.sequence[rank];
        auto xs = detail::by_rank(half_sets[u], o);
        int p = static_cast<int>(xs.size());
        auto first_radius = wreach_profile(g, o, u, d / 2);

        std::vector<int> key;
        key.push_back(p);
        for (int i = 0; i < p; ++i) key.push_back(lambda[xs[i]]);
        for (int i = 0; i < p; ++i) {
            if (first_radius[xs[i]] < 0) throw validation_error("xi_subcolor: inconsistent weak reach data");
            key.push_back(first_radius[xs[i]]);
        }
        for (int j = 1; j < p; ++j) {
            const auto& reach_j = full_by_rank[xs[j]];
            for (int i = 0; i < j; ++i) {
                auto it = std::find(reach_j.begin(), reach_j.end(), xs[i]);
                if (it == reach_j.end()) throw validation_error("xi_subcolor: x_i must be d-reachable from x_j");
                key.push_back(static_cast<int>(it - reach_j.begin()) + 1);
            }
        }

        auto [it, inserted] = palette_of_triple.try_emplace(std::move(key), out.palette);
        if (inserted) ++out.palette;
        out.color[u] = it->second;
    }
    return out;
}

struct SubcoloringWitness {
    int u = -1, v = -1, w = -1; // monochromatic induced path u - v - w
};

struct ValidationReport {
    bool valid = false;
    SubcoloringWitness witness;
    int palette = 0;
    int classes_checked = 0;
};

// Verify that every color class of s induces a disjoint union of cliques in
// h; on failure report one monochromatic induced 3-vertex path.
inline ValidationReport validate_subcoloring(const Graph& h, const SubColoring& s) {
    if (static_cast<int>(s.color.size()) != h.n)
        throw std::invalid_argument("validate_subcoloring: coloring does not cover the graph");
    int palette = 0;
    for (int c : s.color) {
        if (c < 0) throw std::invalid_argument("validate_subcoloring: partially colored input");
        palette = std::max(palette, c + 1);
    }

    ValidationReport report;
    report.palette = palette;
    report.valid = true;

    std::vector<VertexSet> classes(palette);
    for (int v = 0; v < h.n; ++v) classes[s.color[v]].push_back(v);

    for (const auto& members : classes) {
        if (members.empty()) continue;
        ++report.classes_checked;
        auto sub = induced_subgraph(h, members);
        std::vector<int> component(sub.graph.n, -1);
        for (int start = 0; start < sub.graph.n; ++start) {
            if (component[start] >= 0) continue;
            std::vector<int> stack{start}, comp;
            component[start] = start;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w : sub.graph.adj[v])
                    if (component[w] < 0) {
                        component[w] = start;
                        stack.push_back(w);
                    }
            }
            for (std::size_t i = 0; i < comp.size() && report.valid; ++i)
                for (std::size_t j = i + 1; j < comp.size() && report.valid; ++j)
                    if (!sub.graph.has_edge(comp[i], comp[j])) {
                        // walk a shortest path between the non-adjacent pair
                        // down to distance 2; its first three vertices induce a P3
                        auto dist = bfs_distances(sub.graph, comp[i]);
                        int cur = comp[j];
                        while (dist[cur] > 2)
                            for (int w : sub.graph.adj[cur])
                                if (dist[w] == dist[cur] - 1) {
                                    cur = w;
                                    break;
                                }
                        int mid = -1;
                        for (int w : sub.graph.adj[cur])
                            if (dist[w] == 1) { mid = w; break; }
                        report.valid = false;
                        report.witness.u = members[comp[i]];
                        report.witness.v = members[mid];
                        report.witness.w = members[cur];
                    }
            if (!report.valid) return report;
        }
    }
    return report;
}

namespace detail {

struct SubchromaticSearch {
    const Graph& h;
    std::vector<int> order;
    std::vector<int> color;
    int palette_cap = 0;

    // v may take color q when its neighbors inside the class cover exactly
    // one existing component (then v extends that clique) or none at all
    bool placeable(int v, int q) const {
        VertexSet members;
        for (int w : order)
            if (color[w] == q) members.push_back(w);
        if (members.empty()) return true;
        std::sort(members.begin(), members.end());
        VertexSet inside_neighbors;
        for (int w : members)
            if (h.has_edge(v, w)) inside_neighbors.push_back(w);
        if (inside_neighbors.empty()) return true;

        // component of the first inside-neighbor within the class
        std::vector<int> stack{inside_neighbors[0]};
        VertexSet comp{inside_neighbors[0]};
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b : members)
                if (b != a && h.has_edge(a, b) && !std::binary_search(comp.begin(), comp.end(), b)) {
                    comp.push_back(b);
                    std::sort(comp.begin(), comp.end());
                    stack.push_back(b);
                }
        }
        return comp == inside_neighbors;
    }

    bool solve(std::size_t index, int used) {
        if (index == order.size()) return true;
        int v = order[index];
        int limit = std::min(palette_cap, used + 1);
        for (int q = 0; q < limit; ++q) {
            if (!placeable(v, q)) continue;
            color[v] = q;
            if (solve(index + 1, std::max(used, q + 1))) return true;
            color[v] = -1;
        }
        return false;
    }
};

} // namespace detail

// Minimum number of colors whose classes all induce cluster graphs, by
// backtracking over vertices in degeneracy order with incremental checks.
inline int exact_subchromatic(const Graph& h, int limit = 14) {
    if (h.n > limit)
        throw size_error("exact_subchromatic: graph has " + std::to_string(h.n) +
                         " vertices, limit is " + std::to_string(limit));
    if (h.n == 0) return 0;
    detail::SubchromaticSearch search{h};
    search.order = degeneracy_ordering(h).ordering.sequence;
    for (int c = 1; c <= h.n; ++c) {
        search.color.assign(h.n, -1);
        search.palette_cap = c;
        if (search.solve(0, 0)) return c;
    }
    return h.n; // unreachable: n colors always work
}

// Text export: one line per vertex, "v color".
inline std::string write_subcoloring(const SubColoring& s) {
    std::string out;
    for (std::size_t v = 0; v < s.color.size(); ++v)
        out += std::to_string(v) + " " + std::to_string(s.color[v]) + "\n";
    return out;
}

} // namespace sparse_powers
