#pragma once

// Brute-force oracles for the test suites. These deliberately avoid the
// library's solver code paths: plain mask scans, exhaustive side
// assignments, and closed-form spectra, so they can referee the optimized
// implementations.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "specbounds/exact.hpp"
#include "specbounds/graph.hpp"

namespace oracles {

using specbounds::BigRat;
using specbounds::Graph;

inline long long edges_inside(const Graph& g, std::uint32_t mask) {
    long long twice = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!((mask >> v) & 1)) continue;
        twice += __builtin_popcountll(g.row64(v) & mask);
    }
    return twice / 2;
}

inline bool independent_mask(const Graph& g, std::uint32_t mask) {
    return edges_inside(g, mask) == 0;
}

inline bool clique_mask(const Graph& g, std::uint32_t mask) {
    const int size = __builtin_popcount(mask);
    return edges_inside(g, mask) == static_cast<long long>(size) * (size - 1) / 2;
}

inline int brute_alpha(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (independent_mask(g, mask)) best = std::max(best, __builtin_popcount(mask));
    return best;
}

inline int brute_omega(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (clique_mask(g, mask)) best = std::max(best, __builtin_popcount(mask));
    return best;
}

// Chromatic number as a minimum cover of V by independent sets, by subset
// dynamic programming (a different algorithm than the library's
// backtracking search).
inline int brute_chi(const Graph& g) {
    const int n = g.vertex_count();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<char> independent(full + 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        independent[mask] = independent_mask(g, mask);
    std::vector<int> dp(full + 1, n + 1);
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !independent[sub]) continue;
            dp[mask] = std::min(dp[mask], dp[mask ^ sub] + 1);
        }
    }
    return dp[full];
}

// True iff some 2-coloring is proper (exhaustive over 2^n colorings).
inline bool brute_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    for (std::uint32_t split = 0; split < (std::uint32_t{1} << n); ++split) {
        bool proper = true;
        for (const auto& [u, v] : edges)
            if (((split >> u) & 1) == ((split >> v) & 1)) {
                proper = false;
                break;
            }
        if (proper) return true;
    }
    return n == 0;
}

struct EtaPair {
    long long e = 0;
    long long p = 1;
};

// eta over all subsets and ALL side assignments: for each subset the inner
// loop walks every split into (V1, V2) and keeps proper ones. 3^n work.
inline EtaPair brute_eta_assignments(const Graph& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    EtaPair best;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const long long e = edges_inside(g, mask);
        if (e < 1) continue;
        std::vector<std::pair<int, int>> inside;
        for (const auto& [u, v] : edges)
            if (((mask >> u) & 1) && ((mask >> v) & 1)) inside.emplace_back(u, v);
        for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
            bool proper = true;
            for (const auto& [u, v] : inside)
                if (((sub >> u) & 1) == ((sub >> v) & 1)) {
                    proper = false;
                    break;
                }
            if (proper) {
                const long long s1 = __builtin_popcount(sub);
                const long long p = s1 * (__builtin_popcount(mask) - s1);
                // maximize e/sqrt(p): compare via e^2 cross-multiplied
                if (p >= 1 && e * e * best.p > best.e * best.e * p) best = {e, p};
            }
            if (sub == 0) break;
        }
    }
    return best;
}

// eta via 2-coloring each subset and exhausting the 2^components side
// choices. Cheaper than the assignment scan, still independent of the
// library's alignment argument.
inline EtaPair brute_eta_components(const Graph& g) {
    const int n = g.vertex_count();
    EtaPair best;
    std::vector<int> color(n);
    std::vector<int> stack;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const long long e = edges_inside(g, static_cast<std::uint32_t>(mask));
        if (e < 1) continue;
        std::fill(color.begin(), color.end(), -1);
        std::vector<std::pair<int, int>> component_sizes;  // (color0, color1) per component
        bool bipartite = true;
        for (int start = 0; start < n && bipartite; ++start) {
            if (!((mask >> start) & 1) || color[start] != -1) continue;
            int c0 = 0, c1 = 0;
            color[start] = 0;
            stack.assign(1, start);
            while (!stack.empty() && bipartite) {
                int v = stack.back();
                stack.pop_back();
                (color[v] == 0 ? c0 : c1)++;
                for (int u : g.neighbors(v)) {
                    if (!((mask >> u) & 1)) continue;
                    if (color[u] == -1) {
                        color[u] = 1 - color[v];
                        stack.push_back(u);
                    } else if (color[u] == color[v]) {
                        bipartite = false;
                        break;
                    }
                }
            }
            component_sizes.emplace_back(c0, c1);
        }
        if (!bipartite) continue;
        const int comps = static_cast<int>(component_sizes.size());
        for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << comps); ++signs) {
            long long v1 = 0, v2 = 0;
            for (int c = 0; c < comps; ++c) {
                if ((signs >> c) & 1) {
                    v1 += component_sizes[c].second;
                    v2 += component_sizes[c].first;
                } else {
                    v1 += component_sizes[c].first;
                    v2 += component_sizes[c].second;
                }
            }
            const long long p = v1 * v2;
            if (p >= 1 && e * e * best.p > best.e * best.e * p) best = {e, p};
        }
    }
    return best;
}

// iota = max 2e/|S| over induced bipartite subsets, via exhaustive proper
// split search per subset.
inline BigRat brute_iota(const Graph& g) {
    const int n = g.vertex_count();
    long long best_e = 0, best_s = 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const long long e = edges_inside(g, mask);
        if (e < 1) continue;
        // bipartite test: some split of mask is proper
        bool bipartite = false;
        std::vector<std::pair<int, int>> inside;
        for (const auto& [u, v] : g.edges())
            if (((mask >> u) & 1) && ((mask >> v) & 1)) inside.emplace_back(u, v);
        for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
            bool proper = true;
            for (const auto& [u, v] : inside)
                if (((sub >> u) & 1) == ((sub >> v) & 1)) {
                    proper = false;
                    break;
                }
            if (proper) {
                bipartite = true;
                break;
            }
            if (sub == 0) break;
        }
        if (!bipartite) continue;
        const long long s = __builtin_popcount(mask);
        if (e * best_s > best_e * s) {
            best_e = e;
            best_s = s;
        }
    }
    return BigRat(2 * best_e, best_s);
}

// iota via per-subset BFS bipartiteness (for hosts up to ~20 vertices).
inline BigRat brute_iota_components(const Graph& g) {
    const int n = g.vertex_count();
    long long best_e = 0, best_s = 1;
    std::vector<int> color(n);
    std::vector<int> stack;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        long long e = 0;
        bool bipartite = true;
        std::fill(color.begin(), color.end(), -1);
        for (int start = 0; start < n && bipartite; ++start) {
            if (!((mask >> start) & 1) || color[start] != -1) continue;
            color[start] = 0;
            stack.assign(1, start);
            while (!stack.empty() && bipartite) {
                int v = stack.back();
                stack.pop_back();
                for (int u : g.neighbors(v)) {
                    if (!((mask >> u) & 1)) continue;
                    if (u > v) ++e;
                    if (color[u] == -1) {
                        color[u] = 1 - color[v];
                        stack.push_back(u);
                    } else if (color[u] == color[v]) {
                        bipartite = false;
                        break;
                    }
                }
            }
        }
        if (!bipartite || e < 1) continue;
        const long long s = __builtin_popcountll(mask);
        if (e * best_s > best_e * s) {
            best_e = e;
            best_s = s;
        }
    }
    return BigRat(2 * best_e, best_s);
}

inline BigRat brute_mad(const Graph& g) {
    const int n = g.vertex_count();
    long long best_e = 0, best_s = 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const long long e = edges_inside(g, mask);
        const long long s = __builtin_popcount(mask);
        if (e * best_s > best_e * s) {
            best_e = e;
            best_s = s;
        }
    }
    return BigRat(2 * best_e, best_s);
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
    }
    return visited == n;
}

inline std::vector<double> cycle_eigenvalues(int n) {
    std::vector<double> values(n);
    for (int k = 0; k < n; ++k) values[k] = 2.0 * std::cos(2.0 * M_PI * k / n);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

inline std::vector<double> path_eigenvalues(int n) {
    std::vector<double> values(n);
    for (int k = 1; k <= n; ++k) values[k - 1] = 2.0 * std::cos(M_PI * k / (n + 1));
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

// Kneser graph K(5,2): 2-subsets of {0..4}, edges between disjoint pairs.
inline Graph petersen() {
    std::vector<std::pair<int, int>> labels;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) labels.emplace_back(a, b);
    std::vector<specbounds::Edge> edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            const auto& [a, b] = labels[i];
            const auto& [c, d] = labels[j];
            if (a != c && a != d && b != c && b != d)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph::from_edges(10, edges);
}

}  // namespace oracles
