#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sparse_powers/errors.hpp"
#include "sparse_powers/graph.hpp"
#include "sparse_powers/ordering.hpp"

namespace sparse_powers {

// Partition of V(G) into cliques of G^d. Every block is the fiber of the
// leader map: the earliest vertex of WReach_{floor(d/2)}. Block ids are
// assigned by rank of the leaders, so block 0 owns the earliest leader.
struct Clustering {
    std::vector<int> block_of;
    std::vector<VertexSet> blocks;
    std::vector<int> leader;
    int d = 1;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

// The earliest vertex (in the ordering) weakly reachable from u within
// radius floor(d/2); equals u itself when d == 1.
inline int leader_vertex(const Graph& g, const VertexOrdering& o, int u, int d) {
    if (d < 1) throw std::invalid_argument("leader_vertex: d must be >= 1");
    auto set = wreach(g, o, u, d / 2);
    int best = u;
    for (int v : set)
        if (o.position[v] < o.position[best]) best = v;
    return best;
}

inline Clustering build_clustering(const Graph& g, const VertexOrdering& o, int d) {
    if (d < 1) throw std::invalid_argument("build_clustering: d must be >= 1");
    require_ordering_for(g, o);

    auto sets = weak_reach_sets(g, o, d / 2);
    std::vector<int> leader_of(g.n);
    for (int u = 0; u < g.n; ++u) {
        int best = u;
        for (int v : sets[u])
            if (o.position[v] < o.position[best]) best = v;
        leader_of[u] = best;
    }

    // group fibers; blocks ordered by the rank of their leader
    std::vector<int> leaders(leader_of);
    std::sort(leaders.begin(), leaders.end(),
              [&](int a, int b) { return o.position[a] < o.position[b]; });
    leaders.erase(std::unique(leaders.begin(), leaders.end()), leaders.end());

    Clustering x;
    x.d = d;
    x.leader = leaders;
    x.blocks.assign(leaders.size(), {});
    x.block_of.assign(g.n, -1);
    std::vector<int> block_of_leader(g.n, -1);
    for (std::size_t b = 0; b < leaders.size(); ++b) block_of_leader[leaders[b]] = static_cast<int>(b);
    for (int u = 0; u < g.n; ++u) {
        int b = block_of_leader[leader_of[u]];
        x.block_of[u] = b;
        x.blocks[b].push_back(u);
    }

    // each block must be a clique in G^d; guaranteed by the triangle
    // inequality through the common leader, so a violation is a bug
    for (const auto& block : x.blocks)
        for (int a : block) {
            auto dist = bfs_distances(g, a, d);
            for (int b : block)
                if (dist[b] < 0)
                    throw validation_error("build_clustering: block is not a clique in G^d");
        }
    return x;
}

struct QuotientGraph {
    Graph graph;          // one vertex per block
    Clustering clustering;
};

// Contract every block to a single vertex; blocks are adjacent when some
// cross pair is adjacent in the host graph. Rejects inputs whose blocks
// fail the clique check (a corrupted clustering).
inline QuotientGraph quotient(const Graph& gd, const Clustering& x) {
    if (static_cast<int>(x.block_of.size()) != gd.n)
        throw validation_error("quotient: clustering does not cover the host graph");
    std::vector<long long> sizes(x.blocks.size(), 0);
    for (int u = 0; u < gd.n; ++u) {
        int b = x.block_of[u];
        if (b < 0 || b >= x.block_count()) throw validation_error("quotient: block id out of range");
        ++sizes[b];
    }
    for (int b = 0; b < x.block_count(); ++b) {
        if (x.blocks[b].empty()) throw validation_error("quotient: empty block");
        if (sizes[b] != static_cast<long long>(x.blocks[b].size()))
            throw validation_error("quotient: block membership mismatch");
        for (int v : x.blocks[b])
            if (x.block_of[v] != b) throw validation_error("quotient: block membership mismatch");
        for (std::size_t i = 0; i < x.blocks[b].size(); ++i)
            for (std::size_t j = i + 1; j < x.blocks[b].size(); ++j)
                if (!gd.has_edge(x.blocks[b][i], x.blocks[b][j]))
                    throw validation_error("quotient: block " + std::to_string(b) +
                                           " is not a clique in the host graph");
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < gd.n; ++u)
        for (int v : gd.adj[u])
            if (u < v && x.block_of[u] != x.block_of[v])
                edges.emplace_back(x.block_of[u], x.block_of[v]);
    QuotientGraph out;
    out.graph = Graph::from_edges(x.block_count(), edges);
    out.clustering = x;
    return out;
}

// Order blocks by the rank of their leaders. With block ids assigned by
// leader rank this is the identity permutation.
inline VertexOrdering quotient_ordering(const Clustering& x, const VertexOrdering& o) {
    std::vector<int> seq(x.block_count());
    for (int b = 0; b < x.block_count(); ++b) seq[b] = b;
    std::sort(seq.begin(), seq.end(),
              [&](int a, int b) { return o.position[x.leader[a]] < o.position[x.leader[b]]; });
    return VertexOrdering::from_sequence(seq);
}

struct BoundReport {
    int d = 0;
    int r = 0;
    int block_count = 0;
    int lhs = 0;                  // wcol_r of the quotient under the block ordering
    int rhs = 0;                  // wcol_{2dr} of G under the input ordering
    bool wcol_ok = false;         // lhs <= rhs
    int per_block_violations = 0; // blocks where |WReach_r[Q,tau,A]| > |WReach_{2dr}[G,o,leader(A)]|
    bool per_block_ok = false;
    int remark_violations = 0;    // blocks whose members do not all weakly reach the leader
    bool remark_ok = false;
    bool pass = false;
};

// Check, per instance, the quotient weak-coloring inequality both at the
// max level (lhs <= rhs) and block by block, plus the leader-intersection
// property: every member of a block weakly reaches the block's leader
// within radius floor(d/2).
inline BoundReport verify_clustering_bound(const Graph& g, const VertexOrdering& o, int d, int r) {
    if (r < 1) throw std::invalid_argument("verify_clustering_bound: r must be >= 1");
    Graph gd = power(g, d);
    Clustering x = build_clustering(g, o, d);
    QuotientGraph q = quotient(gd, x);
    VertexOrdering tau = quotient_ordering(x, o);

    BoundReport report;
    report.d = d;
    report.r = r;
    report.block_count = x.block_count();

    auto quotient_counts = weak_reach_counts(q.graph, tau, r);
    auto host_counts = weak_reach_counts(g, o, 2 * d * r);
    report.lhs = 0;
    report.rhs = wcol_of_ordering(g, o, 2 * d * r);
    for (int b = 0; b < x.block_count(); ++b) {
        report.lhs = std::max(report.lhs, quotient_counts[b]);
        if (quotient_counts[b] > host_counts[x.leader[b]]) ++report.per_block_violations;
    }
    report.wcol_ok = report.lhs <= report.rhs;
    report.per_block_ok = report.per_block_violations == 0;

    auto half_sets = weak_reach_sets(g, o, d / 2);
    for (int b = 0; b < x.block_count(); ++b)
        for (int a : x.blocks[b])
            if (!std::binary_search(half_sets[a].begin(), half_sets[a].end(), x.leader[b])) {
                ++report.remark_violations;
                break;
            }
    report.remark_ok = report.remark_violations == 0;

    report.pass = report.wcol_ok && report.per_block_ok && report.remark_ok;
    return report;
}

// Text export: one line per block, "leader: v1 v2 ...".
inline std::string write_clustering(const Clustering& x) {
    std::string out;
    for (int b = 0; b < x.block_count(); ++b) {
        out += std::to_string(x.leader[b]);
        out += ":";
        for (int v : x.blocks[b]) {
            out += " ";
            out += std::to_string(v);
        }
        out += "\n";
    }
    return out;
}

} // namespace sparse_powers
