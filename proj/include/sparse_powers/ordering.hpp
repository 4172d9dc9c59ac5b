#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "sparse_powers/errors.hpp"
#include "sparse_powers/graph.hpp"

namespace sparse_powers {

// Linear order on the vertices of a graph: position maps vertex -> rank,
// sequence is the inverse permutation.
struct VertexOrdering {
    std::vector<int> position;
    std::vector<int> sequence;

    int size() const { return static_cast<int>(sequence.size()); }

    static VertexOrdering identity(int n) {
        VertexOrdering o;
        o.position.resize(n);
        o.sequence.resize(n);
        std::iota(o.position.begin(), o.position.end(), 0);
        std::iota(o.sequence.begin(), o.sequence.end(), 0);
        return o;
    }

    static VertexOrdering from_sequence(std::vector<int> seq) {
        int n = static_cast<int>(seq.size());
        VertexOrdering o;
        o.sequence = std::move(seq);
        o.position.assign(n, -1);
        for (int rank = 0; rank < n; ++rank) {
            int v = o.sequence[rank];
            if (v < 0 || v >= n || o.position[v] != -1)
                throw std::invalid_argument("VertexOrdering: sequence is not a permutation");
            o.position[v] = rank;
        }
        return o;
    }
};

inline void require_ordering_for(const Graph& g, const VertexOrdering& o) {
    if (o.size() != g.n)
        throw std::invalid_argument("ordering does not match the graph's vertex set");
}

struct ProperColoring {
    std::vector<int> color;
    int palette = 0;
};

inline bool is_proper(const Graph& g, const std::vector<int>& color) {
    if (static_cast<int>(color.size()) != g.n) return false;
    for (int u = 0; u < g.n; ++u) {
        if (color[u] < 0) return false;
        for (int v : g.adj[u])
            if (color[u] == color[v]) return false;
    }
    return true;
}

struct DegeneracyResult {
    VertexOrdering ordering;
    int coloring_number = 0;
};

// Min-degree extraction with smallest-id tie-break; each extracted vertex
// is placed in front of the previously extracted ones, so the coloring
// number of the produced ordering equals degeneracy + 1.
inline DegeneracyResult degeneracy_ordering(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("degeneracy_ordering: empty graph");
    std::vector<int> deg(g.n);
    std::set<std::pair<int, int>> queue;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(g.n, 0);
    std::vector<int> extraction;
    extraction.reserve(g.n);
    int max_extraction_degree = 0;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        extraction.push_back(v);
        max_extraction_degree = std::max(max_extraction_degree, d);
        for (int w : g.adj[v])
            if (!removed[w]) {
                queue.erase({deg[w], w});
                --deg[w];
                queue.insert({deg[w], w});
            }
    }
    std::reverse(extraction.begin(), extraction.end());
    DegeneracyResult out;
    out.ordering = VertexOrdering::from_sequence(std::move(extraction));
    out.coloring_number = max_extraction_degree + 1;
    return out;
}

// 1 + max over u of the number of neighbors placed before u.
inline int coloring_number_of(const Graph& g, const VertexOrdering& o) {
    require_ordering_for(g, o);
    int worst = 0;
    for (int u = 0; u < g.n; ++u) {
        int back = 0;
        for (int v : g.adj[u])
            if (o.position[v] < o.position[u]) ++back;
        worst = std::max(worst, back);
    }
    return worst + 1;
}

// Each vertex, in order, takes the least color absent among earlier neighbors.
inline ProperColoring greedy_color(const Graph& g, const VertexOrdering& o) {
    require_ordering_for(g, o);
    ProperColoring out;
    out.color.assign(g.n, -1);
    std::vector<char> used;
    for (int rank = 0; rank < g.n; ++rank) {
        int u = o.sequence[rank];
        used.assign(g.degree(u) + 1, 0);
        for (int v : g.adj[u]) {
            int c = out.color[v];
            if (c >= 0 && c <= g.degree(u)) used[c] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        out.color[u] = c;
        out.palette = std::max(out.palette, c + 1);
    }
    return out;
}

// Earliest round (path length) at which each vertex enters WReach_t[u],
// up to the given radius; -1 for vertices never weakly reached.
// Max-min relaxation over walk bottleneck ranks: reach[w] is the best
// achievable minimum rank over walks u -> w of length <= round, and v is
// weakly reached exactly when reach[v] == position[v]. Updates of a round
// are staged so they only propagate in the next one, keeping the length
// accounting exact (a cycle-free witness walk is a path of equal length).
inline std::vector<int> wreach_profile(const Graph& g, const VertexOrdering& o, int u, int radius) {
    require_ordering_for(g, o);
    if (u < 0 || u >= g.n) throw std::invalid_argument("wreach: bad vertex");
    if (radius < 0) throw std::invalid_argument("wreach: negative radius");
    std::vector<int> reach(g.n, -1), staged(g.n, -1);
    std::vector<int> first_round(g.n, -1);
    reach[u] = o.position[u];
    first_round[u] = 0;
    std::vector<int> frontier{u}, touched;
    for (int round = 1; round <= radius && !frontier.empty(); ++round) {
        touched.clear();
        for (int w : frontier)
            for (int x : g.adj[w]) {
                int bottleneck = std::min(reach[w], o.position[x]);
                if (bottleneck > reach[x] && bottleneck > staged[x]) {
                    if (staged[x] < 0) touched.push_back(x);
                    staged[x] = bottleneck;
                }
            }
        frontier.clear();
        for (int x : touched) {
            reach[x] = staged[x];
            staged[x] = -1;
            if (first_round[x] < 0 && reach[x] == o.position[x]) first_round[x] = round;
            frontier.push_back(x);
        }
    }
    return first_round;
}

// WReach_r[G,o,u]: vertices v placed at or before u joined to u by a path
// of length <= r whose vertices all rank >= v. Contains u itself.
inline VertexSet wreach(const Graph& g, const VertexOrdering& o, int u, int radius) {
    auto profile = wreach_profile(g, o, u, radius);
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (profile[v] >= 0) out.push_back(v);
    return out;
}

// All WReach_r sets at once: one depth-r BFS per candidate target v,
// confined to vertices ranked at or above v; every vertex u the BFS
// reaches has v in its set.
inline std::vector<VertexSet> weak_reach_sets(const Graph& g, const VertexOrdering& o, int radius) {
    require_ordering_for(g, o);
    if (radius < 0) throw std::invalid_argument("weak_reach_sets: negative radius");
    std::vector<VertexSet> sets(g.n);
    std::vector<int> stamp(g.n, -1);
    std::vector<int> frontier, next;
    for (int rank = 0; rank < g.n; ++rank) {
        int v = o.sequence[rank];
        stamp[v] = rank;
        sets[v].push_back(v);
        frontier.assign(1, v);
        for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
            next.clear();
            for (int w : frontier)
                for (int x : g.adj[w]) {
                    if (o.position[x] < rank || stamp[x] == rank) continue;
                    stamp[x] = rank;
                    sets[x].push_back(v);
                    next.push_back(x);
                }
            frontier.swap(next);
        }
    }
    for (auto& s : sets) std::sort(s.begin(), s.end());
    return sets;
}

inline std::vector<int> weak_reach_counts(const Graph& g, const VertexOrdering& o, int radius) {
    require_ordering_for(g, o);
    if (radius < 0) throw std::invalid_argument("weak_reach_counts: negative radius");
    std::vector<int> counts(g.n, 0);
    std::vector<int> stamp(g.n, -1);
    std::vector<int> frontier, next;
    for (int rank = 0; rank < g.n; ++rank) {
        int v = o.sequence[rank];
        stamp[v] = rank;
        ++counts[v];
        frontier.assign(1, v);
        for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
            next.clear();
            for (int w : frontier)
                for (int x : g.adj[w]) {
                    if (o.position[x] < rank || stamp[x] == rank) continue;
                    stamp[x] = rank;
                    ++counts[x];
                    next.push_back(x);
                }
            frontier.swap(next);
        }
    }
    return counts;
}

// wcol_r(G, o) = max WReach_r set size.
inline int wcol_of_ordering(const Graph& g, const VertexOrdering& o, int radius) {
    auto counts = weak_reach_counts(g, o, radius);
    int best = 0;
    for (int c : counts) best = std::max(best, c);
    return best;
}

struct ExactWcol {
    int value = 0;
    VertexOrdering ordering;
};

namespace detail {

// |WReach_r[v]| once v is appended to a prefix, with every unplaced vertex
// treated as ranked above the whole prefix. Placing later vertices cannot
// change this value, which is what makes prefix branch-and-bound sound.
inline int prefix_wreach_size(const Graph& g, const std::vector<int>& position, int v, int radius) {
    constexpr int kUnplaced = std::numeric_limits<int>::max();
    auto rank_of = [&](int w) { return position[w] < 0 ? kUnplaced : position[w]; };
    std::vector<int> reach(g.n, -1), staged(g.n, -1);
    reach[v] = rank_of(v);
    std::vector<int> frontier{v}, touched;
    for (int round = 1; round <= radius && !frontier.empty(); ++round) {
        touched.clear();
        for (int w : frontier)
            for (int x : g.adj[w]) {
                int bottleneck = std::min(reach[w], rank_of(x));
                if (bottleneck > reach[x] && bottleneck > staged[x]) {
                    if (staged[x] < 0) touched.push_back(x);
                    staged[x] = bottleneck;
                }
            }
        frontier.clear();
        for (int x : touched) {
            reach[x] = staged[x];
            staged[x] = -1;
            frontier.push_back(x);
        }
    }
    int size = 0;
    for (int w = 0; w < g.n; ++w)
        if (position[w] >= 0 && reach[w] == position[w]) ++size;
    return size;
}

struct ExactWcolSearch {
    const Graph& g;
    int radius;
    int best = std::numeric_limits<int>::max();
    std::vector<int> best_sequence;
    std::vector<int> position;
    std::vector<int> sequence;

    void run(int depth, int current_max) {
        if (current_max >= best) return;
        if (depth == g.n) {
            best = current_max;
            best_sequence = sequence;
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (position[v] >= 0) continue;
            position[v] = depth;
            sequence.push_back(v);
            int size = prefix_wreach_size(g, position, v, radius);
            run(depth + 1, std::max(current_max, size));
            sequence.pop_back();
            position[v] = -1;
        }
    }
};

} // namespace detail

// Minimum wcol_r over all vertex orderings, found by exhaustive search with
// branch-and-bound pruning; the witness is the lexicographically smallest
// sequence attaining the minimum.
inline ExactWcol exact_wcol(const Graph& g, int radius, int limit = 9) {
    if (radius < 0) throw std::invalid_argument("exact_wcol: negative radius");
    if (g.n > limit)
        throw size_error("exact_wcol: graph has " + std::to_string(g.n) + " vertices, limit is " +
                         std::to_string(limit));
    detail::ExactWcolSearch search{g, radius};
    search.position.assign(g.n, -1);
    search.run(0, 0);
    ExactWcol out;
    out.value = g.n == 0 ? 0 : search.best;
    out.ordering = VertexOrdering::from_sequence(std::move(search.best_sequence));
    return out;
}

} // namespace sparse_powers
