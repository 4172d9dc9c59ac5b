#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sparse_powers/errors.hpp"
#include "sparse_powers/graph.hpp"
#include "sparse_powers/ordering.hpp"

namespace sparse_powers {

inline bool is_clique(const Graph& h, const VertexSet& s) {
    if (!is_vertex_set(s, h.n)) throw std::invalid_argument("is_clique: not a vertex set of the graph");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!h.has_edge(s[i], s[j])) return false;
    return true;
}

// Pair of equal-length sequences with x_i y_i non-edges and x_i y_j edges
// for i < j. Entries of a pair are required to be distinct vertices.
struct SemiLadder {
    std::vector<int> xs;
    std::vector<int> ys;

    int length() const { return static_cast<int>(xs.size()); }
};

inline bool is_semi_ladder(const Graph& h, const SemiLadder& ladder) {
    if (ladder.xs.size() != ladder.ys.size()) return false;
    int k = ladder.length();
    for (int i = 0; i < k; ++i) {
        if (ladder.xs[i] == ladder.ys[i]) return false;
        if (h.has_edge(ladder.xs[i], ladder.ys[i])) return false;
        for (int j = i + 1; j < k; ++j)
            if (!h.has_edge(ladder.xs[i], ladder.ys[j])) return false;
    }
    return true;
}

struct ApxRound {
    VertexSet absorbed;    // universal vertices taken at the start of the round
    VertexSet j_before;    // working graph right after the universal sweep
    int picked = -1;       // vertex maximizing col of its closed neighborhood
    int nonneighbor = -1;  // smallest-id witness that picked was not universal
    VertexSet j_after;     // working graph at the end of the round
};

struct CliqueReport {
    VertexSet clique;
    std::string algorithm;
    int rounds = 0;
    SemiLadder witness;          // (picked, nonneighbor) pairs, one per full round
    VertexSet final_universal;   // universal sweep of the terminating partial round
    std::vector<ApxRound> trace;
};

// Greedy clique construction guided by coloring numbers: repeatedly absorb
// universal vertices, then descend into the closed neighborhood of a vertex
// whose neighborhood has the largest coloring number. The picked vertices
// and their non-neighbors form a semi-ladder, so the number of full rounds
// is at most the semi-ladder index of the graph.
inline CliqueReport apx_clique(const Graph& h) {
    if (h.n == 0) throw std::invalid_argument("apx_clique: empty graph");
    CliqueReport report;
    report.algorithm = "apx-clique";

    VertexSet j(h.n);
    for (int v = 0; v < h.n; ++v) j[v] = v;
    VertexSet k;

    while (!j.empty()) {
        auto sub = induced_subgraph(h, j);
        VertexSet universal_local = universal_vertices(sub.graph);
        VertexSet absorbed;
        for (int v : universal_local) absorbed.push_back(sub.vertices[v]);
        for (int v : absorbed) k.push_back(v);
        VertexSet remaining;
        std::set_difference(j.begin(), j.end(), absorbed.begin(), absorbed.end(),
                            std::back_inserter(remaining));
        j = std::move(remaining);
        if (j.empty()) {
            report.final_universal = absorbed;
            break;
        }

        auto current = induced_subgraph(h, j);
        int best_vertex = -1;
        int best_col = -1;
        for (int u = 0; u < current.graph.n; ++u) {
            VertexSet closed = current.graph.adj[u];
            closed.push_back(u);
            std::sort(closed.begin(), closed.end());
            auto neighborhood = induced_subgraph(current.graph, closed);
            int col = degeneracy_ordering(neighborhood.graph).coloring_number;
            if (col > best_col) {
                best_col = col;
                best_vertex = u;
            }
        }
        int picked = current.vertices[best_vertex];
        int nonneighbor = -1;
        for (int w : j)
            if (w != picked && !h.has_edge(picked, w)) {
                nonneighbor = w;
                break;
            }

        ApxRound round;
        round.absorbed = absorbed;
        round.j_before = j;
        round.picked = picked;
        round.nonneighbor = nonneighbor;

        k.push_back(picked);
        report.witness.xs.push_back(picked);
        report.witness.ys.push_back(nonneighbor);

        VertexSet next;
        for (int w : j)
            if (w != picked && h.has_edge(picked, w)) next.push_back(w);
        j = std::move(next);
        round.j_after = j;
        report.trace.push_back(std::move(round));
        ++report.rounds;
    }

    std::sort(k.begin(), k.end());
    report.clique = std::move(k);
    return report;
}

struct SemiLadderIndex {
    int k = 0;
    SemiLadder witness;
    bool complete = false;
};

namespace detail {

struct SemiLadderSearch {
    const Graph& h;
    int cap;
    long long node_budget;
    int best = 0;
    SemiLadder best_witness;
    SemiLadder current;
    bool exhausted = true;

    // extend the ladder; candidates for the next y are the common neighbors
    // of all previous xs
    void run(const VertexSet& common) {
        if (node_budget-- <= 0) {
            exhausted = false;
            return;
        }
        int depth = current.length();
        if (depth + static_cast<int>(common.size()) <= best) return;
        if (depth >= cap) return;
        for (int x = 0; x < h.n; ++x) {
            for (int y : common) {
                if (y == x || h.has_edge(x, y)) continue;
                current.xs.push_back(x);
                current.ys.push_back(y);
                if (current.length() > best) {
                    best = current.length();
                    best_witness = current;
                }
                VertexSet next;
                std::set_intersection(common.begin(), common.end(), h.adj[x].begin(), h.adj[x].end(),
                                      std::back_inserter(next));
                run(next);
                current.xs.pop_back();
                current.ys.pop_back();
            }
        }
    }
};

} // namespace detail

// Largest semi-ladder length, by exhaustive search with pruning on the
// shrinking pool of common neighbors. Exact when the search ran to
// completion below the cap.
inline SemiLadderIndex semi_ladder_index(const Graph& h, int cap = -1,
                                         long long node_budget = 50'000'000) {
    if (cap < 0) cap = h.n;
    detail::SemiLadderSearch search{h, cap, node_budget};
    VertexSet all(h.n);
    for (int v = 0; v < h.n; ++v) all[v] = v;
    search.run(all);
    SemiLadderIndex out;
    out.k = search.best;
    out.witness = search.best_witness;
    // a ladder has pairwise distinct xs, so cap >= n never truncates
    bool cap_limited = search.best >= cap && cap < h.n;
    out.complete = search.exhausted && !cap_limited;
    return out;
}

// All maximal cliques via pivoted Bron-Kerbosch; output sorted.
inline std::vector<VertexSet> bron_kerbosch(const Graph& h) {
    std::vector<VertexSet> cliques;
    VertexSet p(h.n), r, x;
    for (int v = 0; v < h.n; ++v) p[v] = v;

    auto intersect_adj = [&](const VertexSet& s, int v) {
        VertexSet out;
        std::set_intersection(s.begin(), s.end(), h.adj[v].begin(), h.adj[v].end(),
                              std::back_inserter(out));
        return out;
    };

    auto rec = [&](auto&& self, VertexSet& rr, VertexSet pp, VertexSet xx) -> void {
        if (pp.empty() && xx.empty()) {
            cliques.push_back(rr);
            return;
        }
        int pivot = -1;
        std::size_t best = 0;
        for (int u : pp)
            if (pivot < 0 || intersect_adj(pp, u).size() > best) {
                best = intersect_adj(pp, u).size();
                pivot = u;
            }
        for (int u : xx)
            if (intersect_adj(pp, u).size() > best) {
                best = intersect_adj(pp, u).size();
                pivot = u;
            }
        VertexSet branch;
        std::set_difference(pp.begin(), pp.end(), h.adj[pivot].begin(), h.adj[pivot].end(),
                            std::back_inserter(branch));
        for (int v : branch) {
            rr.push_back(v);
            self(self, rr, intersect_adj(pp, v), intersect_adj(xx, v));
            rr.pop_back();
            pp.erase(std::find(pp.begin(), pp.end(), v));
            auto it = std::lower_bound(xx.begin(), xx.end(), v);
            xx.insert(it, v);
        }
    };
    if (h.n > 0) rec(rec, r, std::move(p), std::move(x));
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

struct EnumerationResult {
    std::vector<VertexSet> cliques;
    long long subsets_considered = 0;
    long long skipped_empty = 0;
    long long skipped_nonclique = 0;
    long long skipped_nonmaximal = 0;
    long long duplicates = 0;
};

// Maximal cliques as closed-neighborhood intersections over the vertex
// subsets of size at most q. Complete whenever q is at least the
// semi-ladder index of the graph. Subtrees with an empty intersection are
// pruned since supersets only shrink it.
inline EnumerationResult enumerate_maximal_cliques_semiladder(const Graph& h, int q) {
    if (q < 1) throw std::invalid_argument("enumerate_maximal_cliques_semiladder: q must be >= 1");
    EnumerationResult result;
    std::set<VertexSet> found;

    auto closed = [&](int v) {
        VertexSet out = h.adj[v];
        out.insert(std::lower_bound(out.begin(), out.end(), v), v);
        return out;
    };

    auto is_maximal = [&](const VertexSet& k) {
        for (int w = 0; w < h.n; ++w) {
            if (std::binary_search(k.begin(), k.end(), w)) continue;
            bool joins_all = true;
            for (int v : k)
                if (!h.has_edge(w, v)) { joins_all = false; break; }
            if (joins_all) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int start, int size, const VertexSet& intersection) -> void {
        for (int v = start; v < h.n; ++v) {
            ++result.subsets_considered;
            VertexSet next;
            if (size == 0) {
                next = closed(v);
            } else {
                auto cv = closed(v);
                std::set_intersection(intersection.begin(), intersection.end(), cv.begin(), cv.end(),
                                      std::back_inserter(next));
            }
            if (next.empty()) {
                ++result.skipped_empty;
                continue;
            }
            if (!is_clique(h, next)) {
                ++result.skipped_nonclique;
            } else if (!is_maximal(next)) {
                ++result.skipped_nonmaximal;
            } else if (!found.insert(next).second) {
                ++result.duplicates;
            }
            if (size + 1 < q) self(self, v + 1, size + 1, next);
        }
    };
    rec(rec, 0, 0, {});
    result.cliques.assign(found.begin(), found.end());
    return result;
}

// Maximum clique by branch and bound over the candidate list.
inline VertexSet max_clique_exact(const Graph& h) {
    VertexSet best;
    VertexSet current;
    auto expand = [&](auto&& self, const VertexSet& candidates) -> void {
        if (current.size() + candidates.size() <= best.size()) return;
        if (candidates.empty()) {
            if (current.size() > best.size()) {
                best = current;
                std::sort(best.begin(), best.end());
            }
            return;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current.size() + (candidates.size() - i) <= best.size()) return;
            int v = candidates[i];
            VertexSet next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (h.has_edge(v, candidates[j])) next.push_back(candidates[j]);
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    VertexSet all(h.n);
    for (int v = 0; v < h.n; ++v) all[v] = v;
    expand(expand, all);
    return best;
}

inline std::string write_cliques(const std::vector<VertexSet>& cliques) {
    std::string out;
    for (const auto& c : cliques) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(c[i]);
        }
        out += "\n";
    }
    return out;
}

} // namespace sparse_powers
