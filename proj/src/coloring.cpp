#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "specbounds/invariants.hpp"
#include "specbounds/limits.hpp"

namespace specbounds {

namespace {

// Largest-first greedy coloring; returns the coloring, deterministic.
std::vector<int> greedy_largest_first(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> colors(n, -1);
    for (int v : order) {
        std::vector<char> used(n, 0);
        for (int w : g.neighbors(v))
            if (colors[w] >= 0) used[colors[w]] = 1;
        int c = 0;
        while (used[c]) ++c;
        colors[v] = c;
    }
    return colors;
}

// k-colorability backtracking: lowest-index vertex next, lowest color first,
// fresh colors capped at one beyond the current maximum.
bool color_with(const Graph& g, int k, int v, int used, std::vector<int>& colors) {
    const int n = g.vertex_count();
    if (v == n) return true;
    const int limit = std::min(k - 1, used);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (w < v && colors[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v] = c;
        if (color_with(g, k, v + 1, std::max(used, c + 1), colors)) return true;
        colors[v] = -1;
    }
    return false;
}

}  // namespace

ColoringResult chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("chromatic_number: empty graph");
    require_within(n, solver_limits().coloring, "chromatic_number");

    const int lower = clique_number(g);
    std::vector<int> greedy = greedy_largest_first(g);
    const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
    if (lower == upper) return {upper, std::move(greedy)};

    for (int k = lower; k < upper; ++k) {
        std::vector<int> colors(n, -1);
        if (color_with(g, k, 0, 0, colors)) return {k, std::move(colors)};
    }
    return {upper, std::move(greedy)};
}

}  // namespace specbounds
