#include <doctest.h>

#include <string>

#include "specbounds/corpus.hpp"
#include "specbounds/generators.hpp"
#include "specbounds/graph6.hpp"

using namespace specbounds;

namespace {

// Independent reference encoder: collects the column-wise upper-triangle
// bits into a flat vector, then packs 6 at a time.
std::string reference_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out(1, static_cast<char>(n + 63));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

}  // namespace

TEST_CASE("known graph6 strings") {
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == complete_graph(3));
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(reference_encode(complete_graph(3)) == "Bw");

    Graph empty = parse_graph6("?");
    CHECK(empty.vertex_count() == 0);
    CHECK(to_graph6(Graph::edgeless(0)) == "?");
}

TEST_CASE("header and line-ending tolerance") {
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
    CHECK(parse_graph6("Bw\n") == complete_graph(3));
    CHECK(parse_graph6("Bw\r\n") == complete_graph(3));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);    // missing data byte
    CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);  // extra data byte
    CHECK_THROWS_AS(parse_graph6("B!"), Graph6Error);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("~??"), Graph6Error);  // multi-byte size header
    CHECK_THROWS_AS(to_graph6(Graph::edgeless(63)), Graph6Error);
}

TEST_CASE("62-vertex boundary") {
    Graph big = path_graph(62);
    CHECK(parse_graph6(to_graph6(big)) == big);
}

TEST_CASE("round trip is the identity on the exhaustive n <= 7 corpus") {
    for (const Graph& g : nonisomorphic_graphs_upto(7)) {
        const std::string line = to_graph6(g);
        CHECK(line == reference_encode(g));
        CHECK(parse_graph6(line) == g);
    }
}

TEST_CASE("round trip over every labeled graph on up to 5 vertices") {
    for (int n = 0; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((mask >> bit) & 1) edges.emplace_back(u, v);
            Graph g = Graph::from_edges(n, edges);
            CHECK(parse_graph6(to_graph6(g)) == g);
            CHECK(to_graph6(g) == reference_encode(g));
        }
    }
}
