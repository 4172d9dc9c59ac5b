#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "sparse_powers/graph.hpp"

namespace sparse_powers {

inline bool is_planar_graph(const Graph& g) {
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) add_edge(static_cast<unsigned>(u), static_cast<unsigned>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

} // namespace sparse_powers
