#include "doctest.h"

#include "sparse_powers/generators.hpp"
#include "sparse_powers/graph.hpp"

#include "oracle_helpers.hpp"

using namespace sparse_powers;

TEST_CASE("parse_graph reads edge lists") {
    auto p = parse_graph("0 1\n1 2");
    CHECK(p.graph.n == 3);
    CHECK(p.graph.edge_count() == 2);
    CHECK(p.graph.has_edge(0, 1));
    CHECK(p.graph.has_edge(1, 2));
    CHECK(!p.graph.has_edge(0, 2));
    CHECK(p.duplicate_edges == 0);
}

TEST_CASE("parse_graph collapses duplicates and counts them") {
    auto p = parse_graph("0 1\n0 1");
    CHECK(p.graph.edge_count() == 1);
    CHECK(p.duplicate_edges == 1);
    // symmetric listing counts as a duplicate too
    auto q = parse_graph("0 1\n1 0");
    CHECK(q.graph.edge_count() == 1);
    CHECK(q.duplicate_edges == 1);
}

TEST_CASE("parse_graph rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("0 0"), format_error);
    CHECK_THROWS_AS(parse_graph("0 x"), format_error);
    CHECK_THROWS_AS(parse_graph("1 2 3"), format_error);
    CHECK_THROWS_AS(parse_graph("-1 2"), format_error);
}

TEST_CASE("parse_graph skips comments and blanks, keeps id gaps as isolated vertices") {
    auto p = parse_graph("# a comment\n\n0 1\n  # another\n3 4\n");
    CHECK(p.graph.n == 5);
    CHECK(p.graph.degree(2) == 0);
    CHECK(p.graph.edge_count() == 2);
}

TEST_CASE("edge list round-trips through the writer") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracle::random_graph(rng.uniform_int(2, 12), 40, rng);
        if (g.edge_count() == 0) continue;
        // the format only carries ids up to the largest endpoint
        auto again = parse_graph(write_edge_list(g)).graph;
        for (int u = 0; u < again.n; ++u)
            CHECK(again.adj[u] == g.adj[u]);
    }
}

TEST_CASE("power small fixtures") {
    Graph p3 = path_graph(3);
    CHECK(power(p3, 2) == complete_graph(3));
    CHECK(power(star_graph(3), 2) == complete_graph(4));
    Graph c5 = cycle_graph(5);
    CHECK(power(c5, 1) == c5);
    CHECK(power(c5, 2) == complete_graph(5));
    CHECK_THROWS_AS(power(p3, 0), std::invalid_argument);
}

TEST_CASE("power matches the all-pairs distance definition") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int n = rng.uniform_int(1, 50);
        Graph g = oracle::random_graph(n, 8, rng);
        auto dist = oracle::all_pairs_distances(g);
        for (int d = 1; d <= 4; ++d) {
            Graph gd = power(g, d);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    bool expected = dist[u][v] <= d;
                    CHECK(gd.has_edge(u, v) == expected);
                }
        }
    }
}

TEST_CASE("power edge sets are monotone in d") {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracle::random_graph(rng.uniform_int(2, 30), 10, rng);
        Graph prev = power(g, 1);
        for (int d = 2; d <= 5; ++d) {
            Graph cur = power(g, d);
            for (int u = 0; u < g.n; ++u)
                for (int v : prev.adj[u]) CHECK(cur.has_edge(u, v));
            prev = cur;
        }
    }
}

TEST_CASE("induced_subgraph relabels and keeps exactly the inner edges") {
    Graph k4 = complete_graph(4);
    auto sub = induced_subgraph(k4, {1, 3});
    CHECK(sub.graph == complete_graph(2));
    CHECK(sub.vertices == VertexSet{1, 3});

    auto p3 = induced_subgraph(cycle_graph(5), {1, 2, 3});
    CHECK(p3.graph == path_graph(3));

    Graph g = petersen_graph();
    VertexSet all(g.n);
    for (int v = 0; v < g.n; ++v) all[v] = v;
    CHECK(induced_subgraph(g, all).graph == g);

    CHECK_THROWS_AS(induced_subgraph(k4, VertexSet{0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(induced_subgraph(k4, VertexSet{2, 1}), std::invalid_argument);
}

TEST_CASE("subdivide fixtures") {
    // single edge with one new vertex is a path on 3 vertices; the branch
    // endpoints keep their ids and sit at distance 2
    auto sub = subdivide(path_graph(2), 1);
    CHECK(sub.graph.n == 3);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.branch_vertex == std::vector<int>{0, 1});
    CHECK(bfs_distances(sub.graph, 0)[1] == 2);
    // triangle with 2 new vertices per edge is a 9-cycle (up to labels)
    Graph c9 = subdivide(cycle_graph(3), 2).graph;
    CHECK(c9.n == 9);
    for (int v = 0; v < c9.n; ++v) CHECK(c9.degree(v) == 2);
    auto dist = bfs_distances(c9, 0);
    CHECK(*std::min_element(dist.begin(), dist.end()) >= 0);
    Graph g = petersen_graph();
    CHECK(subdivide(g, 0).graph == g);
    CHECK_THROWS_AS(subdivide(g, -1), std::invalid_argument);
}

TEST_CASE("power of the (d-1)-subdivision restricted to branch vertices is the original") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.uniform_int(1, 10);
        Graph h = oracle::random_graph(n, 35, rng);
        for (int d : {2, 3}) {
            auto sub = subdivide(h, d - 1);
            Graph powered = power(sub.graph, d);
            VertexSet branch(h.n);
            for (int v = 0; v < h.n; ++v) branch[v] = sub.branch_vertex[v];
            CHECK(induced_subgraph(powered, branch).graph == h);
        }
    }
}

TEST_CASE("universal_vertices") {
    CHECK(universal_vertices(complete_graph(4)) == VertexSet{0, 1, 2, 3});
    CHECK(universal_vertices(path_graph(3)) == VertexSet{1});
    CHECK(universal_vertices(cycle_graph(5)).empty());
    CHECK(universal_vertices(empty_graph(1)) == VertexSet{0});
}

TEST_CASE("universal vertices always form a clique") {
    Rng rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_graph(rng.uniform_int(1, 12), 70, rng);
        auto u = universal_vertices(g);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j) CHECK(g.has_edge(u[i], u[j]));
    }
}
