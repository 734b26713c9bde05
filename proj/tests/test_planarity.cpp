#include <doctest.h>

#include "oracles.hpp"
#include "specbounds/corpus.hpp"
#include "specbounds/generators.hpp"
#include "specbounds/invariants.hpp"
#include "specbounds/limits.hpp"

using namespace specbounds;

TEST_CASE("kuratowski graphs are non-planar") {
    CHECK_FALSE(is_planar_small(complete_graph(5)));
    CHECK_FALSE(is_planar_small(regular_bipartite(3, 3)));
    CHECK_FALSE(is_planar_small(complete_graph(6)));
    CHECK_FALSE(is_planar_small(oracles::petersen()));
}

TEST_CASE("small planar graphs are recognized") {
    CHECK(is_planar_small(complete_graph(4)));
    CHECK(is_planar_small(complete_multipartite(3, 2)));  // octahedron
    CHECK(is_planar_small(grid_graph(3, 3)));
    CHECK(is_planar_small(grid_graph(2, 5)));
    CHECK(is_planar_small(cycle_graph(9)));
    CHECK(is_planar_small(path_graph(10)));
    // wheel on 6 vertices
    CHECK(is_planar_small(join(Graph::edgeless(1), cycle_graph(5))));
}

TEST_CASE("one edge less than Kuratowski is planar") {
    Graph k5 = complete_graph(5);
    std::vector<Edge> edges = k5.edges();
    edges.pop_back();
    CHECK(is_planar_small(Graph::from_edges(5, edges)));

    Graph k33 = regular_bipartite(3, 3);
    edges = k33.edges();
    edges.pop_back();
    CHECK(is_planar_small(Graph::from_edges(6, edges)));
}

TEST_CASE("minors hide in disconnected padding") {
    // K_5 plus isolated vertices passes the edge filter but not the search
    Graph padded = disjoint_union(complete_graph(5), Graph::edgeless(5));
    CHECK_FALSE(is_planar_small(padded));
    CHECK_FALSE(is_planar_small(disjoint_union(regular_bipartite(3, 3), Graph::edgeless(1))));
    CHECK(is_planar_small(disjoint_union(complete_graph(4), complete_graph(4))));
}

TEST_CASE("subdivided K_5 has a K_5 minor") {
    // split one K_5 edge through a fresh vertex
    std::vector<Edge> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
    edges.emplace_back(0, 5);
    edges.emplace_back(5, 1);
    CHECK_FALSE(is_planar_small(Graph::from_edges(6, edges)));
}

TEST_CASE("planar counts on the exhaustive corpus") {
    // numbers of planar graphs per order: 1, 2, 4, 11, 33, 142, 822
    const int expected[] = {1, 2, 4, 11, 33, 142, 822};
    for (int n = 1; n <= 7; ++n) {
        int planar = 0;
        for (const Graph& g : nonisomorphic_graphs(n))
            if (is_planar_small(g)) ++planar;
        CHECK(planar == expected[n - 1]);
    }
}

TEST_CASE("size ceiling") {
    CHECK_THROWS_AS(is_planar_small(path_graph(11)), SizeLimitError);
}
