#include "doctest.h"

#include "sparse_powers/cliques.hpp"
#include "sparse_powers/generators.hpp"
#include "sparse_powers/oracles.hpp"

#include "oracle_helpers.hpp"

using namespace sparse_powers;

TEST_CASE("is_clique") {
    Graph c5 = cycle_graph(5);
    CHECK(is_clique(c5, {2}));
    CHECK(is_clique(c5, {0, 1}));
    CHECK(!is_clique(c5, {0, 2}));
    Graph k4e = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); // K4 minus 2-3
    CHECK(!is_clique(k4e, {0, 1, 2, 3}));
    CHECK(is_clique(k4e, {0, 1, 2}));
}

TEST_CASE("apx_clique on complete graphs absorbs everything in zero full rounds") {
    for (int n : {1, 2, 5, 9}) {
        auto report = apx_clique(complete_graph(n));
        CHECK(report.rounds == 0);
        CHECK(report.witness.length() == 0);
        CHECK(static_cast<int>(report.clique.size()) == n);
    }
}

TEST_CASE("apx_clique on P3") {
    auto report = apx_clique(path_graph(3));
    CHECK(report.clique == VertexSet{0, 1});
    CHECK(report.rounds == 1);
    CHECK(report.witness.xs == std::vector<int>{0});
    CHECK(report.witness.ys == std::vector<int>{2});
}

TEST_CASE("apx_clique on C5 finds a maximum clique") {
    auto report = apx_clique(cycle_graph(5));
    CHECK(report.clique.size() == 2);
    CHECK(is_clique(cycle_graph(5), report.clique));
    CHECK(report.rounds == report.witness.length());
}

TEST_CASE("apx_clique always returns a clique with a valid semi-ladder witness") {
    Rng rng(97);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.uniform_int(1, 20);
        Graph h = trial % 3 == 0 ? power(random_tree(std::max(n, 2), rng), 2)
                                 : oracle::random_graph(n, rng.uniform_int(10, 80), rng);
        auto report = apx_clique(h);
        CHECK(is_clique(h, report.clique));
        CHECK(!report.clique.empty());
        CHECK(report.rounds == report.witness.length());
        CHECK(is_semi_ladder(h, report.witness));
    }
}

TEST_CASE("semi_ladder_index fixtures") {
    CHECK(semi_ladder_index(complete_graph(4)).k == 0);
    CHECK(semi_ladder_index(complete_graph(4)).complete);
    CHECK(semi_ladder_index(complete_graph(1)).k == 0);
    for (int n : {2, 3, 6}) {
        auto res = semi_ladder_index(empty_graph(n));
        CHECK(res.k == 1);
        CHECK(res.complete);
    }
    auto c5 = semi_ladder_index(cycle_graph(5));
    CHECK(c5.k == 3);
    CHECK(c5.complete);
    CHECK(is_semi_ladder(cycle_graph(5), c5.witness));
}

TEST_CASE("semi ladder witnesses are valid and the cap is honored") {
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        Graph h = oracle::random_graph(rng.uniform_int(1, 12), 40, rng);
        auto res = semi_ladder_index(h);
        CHECK(res.complete);
        CHECK(is_semi_ladder(h, res.witness));
        CHECK(res.witness.length() == res.k);
        // no ladder of length k+1 exists: brute-force a tiny certificate by
        // capping the same search above k
        auto capped = semi_ladder_index(h, res.k + 1);
        CHECK(capped.k == res.k);
    }
}

TEST_CASE("apx_clique rounds never exceed the semi-ladder index") {
    Rng rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform_int(1, 18);
        Graph h = trial % 3 == 0 ? power(random_tree(std::max(n, 2), rng), 2)
                                 : oracle::random_graph(n, rng.uniform_int(10, 70), rng);
        auto index = semi_ladder_index(h);
        if (!index.complete) continue;
        CHECK(apx_clique(h).rounds <= index.k);
    }
}

TEST_CASE("per-round progress of apx_clique in terms of measured col/omega ratios") {
    Rng rng(107);
    for (int trial = 0; trial < 12; ++trial) {
        int n = rng.uniform_int(4, 16);
        Graph h = trial % 2 == 0 ? power(random_tree(n, rng), 2)
                                 : oracle::random_graph(n, 40, rng);
        auto report = apx_clique(h);
        double omega_h = static_cast<double>(max_clique_exact(h).size());
        double c = 1.0;
        for (const auto& round : report.trace) {
            auto sub = induced_subgraph(h, round.j_before);
            for (int u = 0; u < sub.graph.n; ++u) {
                VertexSet closed = sub.graph.adj[u];
                closed.push_back(u);
                std::sort(closed.begin(), closed.end());
                auto nb = induced_subgraph(sub.graph, closed);
                double col = degeneracy_ordering(nb.graph).coloring_number;
                double omega = static_cast<double>(max_clique_exact(nb.graph).size());
                c = std::max(c, col / omega);
            }
        }
        std::size_t k_so_far = 0;
        double scale = 1.0;
        for (const auto& round : report.trace) {
            k_so_far += round.absorbed.size() + 1;
            scale *= c;
            auto ji = induced_subgraph(h, round.j_after);
            double omega_ji = static_cast<double>(max_clique_exact(ji.graph).size());
            CHECK(static_cast<double>(k_so_far) + omega_ji >= omega_h / scale - 1e-9);
        }
    }
}

TEST_CASE("bron_kerbosch fixtures") {
    auto c5 = bron_kerbosch(cycle_graph(5));
    CHECK(c5.size() == 5);
    CHECK(bron_kerbosch(complete_graph(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
    auto c4 = bron_kerbosch(cycle_graph(4));
    CHECK(c4.size() == 4);
    for (const auto& c : c4) CHECK(c.size() == 2);
}

TEST_CASE("bron_kerbosch agrees with subset enumeration on small graphs") {
    Rng rng(109);
    for (int trial = 0; trial < 50; ++trial) {
        Graph h = oracle::random_graph(rng.uniform_int(1, 11), 40, rng);
        CHECK(bron_kerbosch(h) == oracle::maximal_cliques_by_subsets(h));
    }
}

TEST_CASE("enumerate_maximal_cliques_semiladder fixtures") {
    auto kn = enumerate_maximal_cliques_semiladder(complete_graph(6), 1);
    CHECK(kn.cliques == std::vector<VertexSet>{{0, 1, 2, 3, 4, 5}});

    auto c5 = enumerate_maximal_cliques_semiladder(cycle_graph(5), 2);
    CHECK(c5.cliques.size() == 5);
    CHECK(c5.skipped_nonmaximal > 0);

    auto p3 = enumerate_maximal_cliques_semiladder(path_graph(3), 2);
    CHECK(p3.cliques == std::vector<VertexSet>{{0, 1}, {1, 2}});
}

TEST_CASE("enumeration with q = semi-ladder index matches bron_kerbosch") {
    Rng rng(113);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng.uniform_int(2, 24);
        Graph h;
        switch (trial % 4) {
            case 0: h = power(random_tree(n, rng), rng.uniform_int(2, 3)); break;
            case 1: h = oracle::random_graph(n, 20, rng); break;
            case 2: h = petersen_graph(); break;
            default: h = power(grid_graph(3, std::max(2, n / 3)), 2); break;
        }
        auto index = semi_ladder_index(h);
        REQUIRE(index.complete);
        int q = std::max(1, index.k);
        auto enumerated = enumerate_maximal_cliques_semiladder(h, q);
        CHECK(enumerated.cliques == bron_kerbosch(h));
        // soundness: everything emitted is a maximal clique
        for (const auto& k : enumerated.cliques) CHECK(is_clique(h, k));
    }
}

TEST_CASE("max_clique_exact fixtures") {
    CHECK(max_clique_exact(complete_graph(5)).size() == 5);
    CHECK(max_clique_exact(cycle_graph(5)).size() == 2);
    CHECK(max_clique_exact(petersen_graph()).size() == 2);
    CHECK(max_clique_exact(empty_graph(0)).empty());
}

TEST_CASE("max_clique_exact matches the largest bron_kerbosch clique") {
    Rng rng(127);
    for (int trial = 0; trial < 40; ++trial) {
        Graph h = oracle::random_graph(rng.uniform_int(1, 12), 45, rng);
        std::size_t best = 0;
        for (const auto& c : bron_kerbosch(h)) best = std::max(best, c.size());
        auto found = max_clique_exact(h);
        CHECK(found.size() == best);
        CHECK(is_clique(h, found));
    }
}

TEST_CASE("clique list export") {
    CHECK(write_cliques({{0, 1}, {2}}) == "0 1\n2\n");
}
