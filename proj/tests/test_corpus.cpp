#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "oracles.hpp"
#include "specbounds/corpus.hpp"
#include "specbounds/graph6.hpp"

using namespace specbounds;

namespace {

// Independent class count for small n: enumerate every labeled graph and
// bucket by a canonical form built from sorted permuted edge lists.
int labeled_class_count(int n) {
    std::vector<int> perm(n);
    std::set<std::string> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1) edges.emplace_back(u, v);

        std::string best;
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            std::vector<Edge> mapped;
            for (const auto& [u, v] : edges)
                mapped.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
            std::sort(mapped.begin(), mapped.end());
            std::string key;
            for (const auto& [u, v] : mapped) {
                key.push_back(static_cast<char>('0' + u));
                key.push_back(static_cast<char>('0' + v));
            }
            if (best.empty() || key < best) best = key;
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert("n" + best);
    }
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("class counts match the known sequence 1,2,4,11,34,156,1044") {
    const int expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) CHECK(nonisomorphic_graphs(n).size() == std::size_t(expected[n - 1]));
}

TEST_CASE("class counts agree with an independent enumeration for n <= 5") {
    for (int n = 2; n <= 5; ++n)
        CHECK(static_cast<int>(nonisomorphic_graphs(n).size()) == labeled_class_count(n));
}

TEST_CASE("corpus members are pairwise distinct as labeled graphs") {
    std::set<std::string> lines;
    for (const Graph& g : nonisomorphic_graphs_upto(7)) lines.insert(to_graph6(g));
    CHECK(lines.size() == std::size_t(1 + 2 + 4 + 11 + 34 + 156 + 1044));
}

TEST_CASE("21 connected graphs on five vertices") {
    int connected = 0;
    for (const Graph& g : nonisomorphic_graphs(5))
        if (oracles::is_connected(g)) ++connected;
    CHECK(connected == 21);
}

TEST_CASE("deterministic order") {
    auto first = nonisomorphic_graphs(6);
    auto second = nonisomorphic_graphs(6);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}
