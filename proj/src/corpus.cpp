#include "specbounds/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace specbounds {

namespace {

// Upper-triangle bit index for u < v, column-wise (graph6 order).
constexpr int pair_index(int u, int v) { return v * (v - 1) / 2 + u; }

Graph graph_of(int n, std::uint64_t mask) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if ((mask >> pair_index(u, v)) & 1) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

// Bit-position relabeling tables, one per vertex permutation.
std::vector<std::vector<std::uint8_t>> permutation_tables(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const int pairs = n * (n - 1) / 2;
    std::vector<std::vector<std::uint8_t>> tables;
    do {
        std::vector<std::uint8_t> table(pairs);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                int a = perm[u], b = perm[v];
                if (a > b) std::swap(a, b);
                table[pair_index(u, v)] = static_cast<std::uint8_t>(pair_index(a, b));
            }
        tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

std::uint64_t canonical_mask(std::uint64_t mask,
                             const std::vector<std::vector<std::uint8_t>>& tables) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& table : tables) {
        std::uint64_t image = 0;
        std::uint64_t rest = mask;
        while (rest) {
            int bit = __builtin_ctzll(rest);
            image |= std::uint64_t{1} << table[bit];
            rest &= rest - 1;
        }
        best = std::min(best, image);
    }
    return best;
}

// Canonical-mask lists per vertex count, grown lazily. Level k is built by
// attaching a new vertex to every class of level k-1 with every possible
// neighborhood, then deduplicating canonical forms.
const std::vector<std::uint64_t>& level_masks(int n) {
    static std::mutex mutex;
    static std::vector<std::vector<std::uint64_t>> levels{{}, {0}};  // index = n
    std::lock_guard lock(mutex);
    while (static_cast<int>(levels.size()) <= n) {
        const int k = static_cast<int>(levels.size());
        const auto tables = permutation_tables(k);
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> next;
        for (std::uint64_t parent : levels[k - 1]) {
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (k - 1)); ++nbrs) {
                std::uint64_t mask = parent;
                for (int u = 0; u < k - 1; ++u)
                    if ((nbrs >> u) & 1) mask |= std::uint64_t{1} << pair_index(u, k - 1);
                std::uint64_t canon = canonical_mask(mask, tables);
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end());
        levels.push_back(std::move(next));
    }
    return levels[n];
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("nonisomorphic_graphs supports 1 <= n <= 8");
    const auto& masks = level_masks(n);
    std::vector<Graph> out;
    out.reserve(masks.size());
    for (std::uint64_t mask : masks) out.push_back(graph_of(n, mask));
    return out;
}

std::vector<Graph> nonisomorphic_graphs_upto(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = nonisomorphic_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace specbounds
