#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sparse_powers/errors.hpp"
#include "sparse_powers/graph.hpp"
#include "sparse_powers/oracles.hpp"
#include "sparse_powers/planarity.hpp"

namespace sparse_powers {

struct GadgetOutput {
    Graph graph;
    std::vector<std::string> labels;
    std::optional<EliminationForest> certificate;
    std::optional<bool> planar;

    // power-cliques parameters
    int n = 0;
    int d = 0;
    int partition_count = 0;
    std::vector<std::array<int, 3>> triples; // (partition t, copy i) -> {vI, vMid, vJ} at t*n + i

    // planar-family parameters
    int branching = 0;
    int depth = 0;
};

namespace detail {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

inline std::string set_label(const std::vector<int>& members) {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(members[i] + 1); // 1-based names u_1..u_2d
    }
    return s + "}";
}

} // namespace detail

// Bounded-treedepth graph whose square packs many maximal cliques: an
// independent set A of 2d vertices, and for every balanced unordered
// partition {I, J} of A and every copy i in 1..n, a 3-vertex path whose
// endpoints attach to the I side and the J side respectively. Ships with an
// elimination forest of depth 2d+2 (A on a chain, each path hung middle
// vertex first below it).
inline GadgetOutput gadget_power_cliques(int n, int d, long long vertex_budget = 200000) {
    if (n < 1 || d < 1) throw std::invalid_argument("gadget_power_cliques: need n >= 1 and d >= 1");
    long long partitions = detail::binomial(2 * d, d) / 2;
    long long total = 2LL * d + 3LL * n * partitions;
    if (total > vertex_budget)
        throw size_error("gadget_power_cliques: would create " + std::to_string(total) +
                         " vertices, budget is " + std::to_string(vertex_budget));

    GadgetOutput out;
    out.n = n;
    out.d = d;
    out.partition_count = static_cast<int>(partitions);
    out.labels.resize(total);
    EliminationForest forest;
    forest.parent.assign(total, -1);

    for (int k = 0; k < 2 * d; ++k) {
        out.labels[k] = "u_" + std::to_string(k + 1);
        forest.parent[k] = k == 0 ? -1 : k - 1;
    }

    // canonical partition order: d-subsets containing u_1, lexicographic
    std::vector<std::vector<int>> sides_i;
    std::vector<int> pick;
    auto choose = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pick.size()) == d) {
            sides_i.push_back(pick);
            return;
        }
        for (int v = next; v < 2 * d; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    pick.push_back(0);
    choose(choose, 1);
    pick.clear();

    std::vector<std::pair<int, int>> edges;
    int next_id = 2 * d;
    int anchor = 2 * d - 1; // bottom of the A chain in the forest
    for (const auto& side_i : sides_i) {
        std::vector<int> side_j;
        std::vector<char> in_i(2 * d, 0);
        for (int v : side_i) in_i[v] = 1;
        for (int v = 0; v < 2 * d; ++v)
            if (!in_i[v]) side_j.push_back(v);
        std::string label_i = detail::set_label(side_i);
        std::string label_j = detail::set_label(side_j);
        for (int copy = 1; copy <= n; ++copy) {
            int v_i = next_id++;
            int v_mid = next_id++;
            int v_j = next_id++;
            out.triples.push_back({v_i, v_mid, v_j});
            out.labels[v_i] = "v^" + std::to_string(copy) + "_" + label_i;
            out.labels[v_mid] = "v^" + std::to_string(copy) + "_" + label_i + "|" + label_j;
            out.labels[v_j] = "v^" + std::to_string(copy) + "_" + label_j;
            for (int a : side_i) edges.emplace_back(v_i, a);
            for (int a : side_j) edges.emplace_back(v_j, a);
            edges.emplace_back(v_mid, v_i);
            edges.emplace_back(v_mid, v_j);
            forest.parent[v_mid] = anchor;
            forest.parent[v_i] = v_mid;
            forest.parent[v_j] = v_mid;
        }
    }
    out.graph = Graph::from_edges(static_cast<int>(total), edges);
    out.certificate = std::move(forest);
    return out;
}

inline long long claimed_clique_count(const GadgetOutput& out) {
    long long count = 1;
    for (int t = 0; t < out.partition_count; ++t) count *= out.n;
    return count;
}

// The claimed maximal cliques of the square: for every choice of one copy
// per partition, the endpoint pair of that copy's path, over all partitions.
// Visits them in lexicographic order of the choice function.
inline void for_each_claimed_clique(const GadgetOutput& out,
                                    const std::function<void(const VertexSet&)>& visit) {
    std::vector<int> choice(out.partition_count, 1);
    while (true) {
        VertexSet clique;
        for (int t = 0; t < out.partition_count; ++t) {
            const auto& triple = out.triples[t * out.n + (choice[t] - 1)];
            clique.push_back(triple[0]);
            clique.push_back(triple[2]);
        }
        std::sort(clique.begin(), clique.end());
        visit(clique);
        int t = out.partition_count - 1;
        while (t >= 0 && choice[t] == out.n) choice[t--] = 1;
        if (t < 0) break;
        ++choice[t];
    }
}

inline std::vector<VertexSet> claimed_cliques(const GadgetOutput& out) {
    std::vector<VertexSet> all;
    all.reserve(static_cast<std::size_t>(claimed_clique_count(out)));
    for_each_claimed_clique(out, [&](const VertexSet& k) { all.push_back(k); });
    return all;
}

// Planar family with subchromatic lower-bound character: a complete b-ary
// tree of the given depth, every tree edge uv decorated with a 9-vertex
// widget (three a-c-b strands, the c spine path, a's tied to u, b's to v).
inline GadgetOutput planar_subchromatic_family(int b, int h, long long vertex_budget = 200000) {
    if (b < 1 || h < 1) throw std::invalid_argument("planar_subchromatic_family: need b >= 1 and h >= 1");
    long long tree_count = 0;
    long long level = 1;
    for (int i = 0; i <= h; ++i) {
        tree_count += level;
        if (tree_count > vertex_budget) break;
        level *= b;
    }
    long long total = tree_count + 9 * (tree_count - 1);
    if (total > vertex_budget)
        throw size_error("planar_subchromatic_family: would create " + std::to_string(total) +
                         " vertices, budget is " + std::to_string(vertex_budget));

    GadgetOutput out;
    out.branching = b;
    out.depth = h;
    out.labels.resize(total);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> tree_edges;
    // tree vertices come first, breadth-first
    std::vector<int> frontier{0};
    int next_id = 1;
    out.labels[0] = "t0";
    for (int lvl = 1; lvl <= h; ++lvl) {
        std::vector<int> next_frontier;
        for (int parent : frontier)
            for (int child = 0; child < b; ++child) {
                int id = next_id++;
                out.labels[id] = "t" + std::to_string(id);
                tree_edges.emplace_back(parent, id);
                next_frontier.push_back(id);
            }
        frontier = std::move(next_frontier);
    }

    int widget_index = 0;
    static const char* kStrand[3] = {"1", "2", "3"};
    for (auto [u, v] : tree_edges) {
        edges.emplace_back(u, v);
        int a[3], c[3], bb[3];
        for (int s = 0; s < 3; ++s) {
            a[s] = next_id++;
            c[s] = next_id++;
            bb[s] = next_id++;
            out.labels[a[s]] = "e" + std::to_string(widget_index) + "_a" + kStrand[s];
            out.labels[c[s]] = "e" + std::to_string(widget_index) + "_c" + kStrand[s];
            out.labels[bb[s]] = "e" + std::to_string(widget_index) + "_b" + kStrand[s];
            edges.emplace_back(a[s], c[s]);
            edges.emplace_back(bb[s], c[s]);
            edges.emplace_back(u, a[s]);
            edges.emplace_back(v, bb[s]);
        }
        edges.emplace_back(c[0], c[1]);
        edges.emplace_back(c[1], c[2]);
        ++widget_index;
    }
    out.graph = Graph::from_edges(static_cast<int>(total), edges);
    out.planar = is_planar_graph(out.graph);
    return out;
}

// Companion exports: "v label" per line, and "v parent" per line (-1 roots).
inline std::string write_labels(const GadgetOutput& out) {
    std::string text;
    for (std::size_t v = 0; v < out.labels.size(); ++v)
        text += std::to_string(v) + " " + out.labels[v] + "\n";
    return text;
}

inline std::string write_forest(const EliminationForest& f) {
    std::string text;
    for (std::size_t v = 0; v < f.parent.size(); ++v)
        text += std::to_string(v) + " " + std::to_string(f.parent[v]) + "\n";
    return text;
}

} // namespace sparse_powers
