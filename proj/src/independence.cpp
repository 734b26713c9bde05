#include <stdexcept>

#include "specbounds/invariants.hpp"
#include "specbounds/limits.hpp"

namespace specbounds {

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

struct MisSolver {
    int n;
    std::vector<std::uint64_t> nbr;
    std::uint64_t best_set = 0;
    int best = 0;

    void expand(std::uint64_t candidates, std::uint64_t current, int current_size) {
        const int free_count = popcount(candidates);
        if (current_size + free_count <= best) return;
        // pivot on the max-degree vertex of the candidate subgraph; track
        // edge count for the vertex-cover pruning bound
        long edges2 = 0;  // twice the edge count of G[candidates]
        int pivot = -1, max_deg = -1;
        for (std::uint64_t rest = candidates; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            int d = popcount(nbr[v] & candidates);
            edges2 += d;
            if (d > max_deg) {
                max_deg = d;
                pivot = v;
            }
        }
        if (max_deg <= 0) {  // candidates independent: take them all
            best = current_size + free_count;
            best_set = current | candidates;
            return;
        }
        // every edge needs a non-selected endpoint, each covering <= max_deg
        const long cover = (edges2 / 2 + max_deg - 1) / max_deg;
        if (current_size + free_count - cover <= best) return;

        const std::uint64_t pivot_bit = std::uint64_t{1} << pivot;
        expand(candidates & ~(nbr[pivot] | pivot_bit), current | pivot_bit, current_size + 1);
        expand(candidates & ~pivot_bit, current, current_size);
    }
};

std::vector<int> bits_of(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctzll(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

IndependenceResult independence_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("independence_number: empty graph");
    require_within(n, solver_limits().independence, "independence_number");
    if (n > 64) throw SizeLimitError("independence_number: bitset engine supports n <= 64");

    MisSolver solver;
    solver.n = n;
    solver.nbr.resize(n);
    for (int v = 0; v < n; ++v) solver.nbr[v] = g.row64(v);

    // greedy seed: repeatedly take a min-degree vertex of what remains
    std::uint64_t remaining = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    const std::uint64_t all = remaining;
    std::uint64_t greedy = 0;
    while (remaining) {
        int pick = -1, min_deg = n + 1;
        for (std::uint64_t rest = remaining; rest;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            int d = popcount(solver.nbr[v] & remaining);
            if (d < min_deg) {
                min_deg = d;
                pick = v;
            }
        }
        greedy |= std::uint64_t{1} << pick;
        remaining &= ~(solver.nbr[pick] | (std::uint64_t{1} << pick));
    }
    solver.best = popcount(greedy);
    solver.best_set = greedy;

    solver.expand(all, 0, 0);
    return {solver.best, bits_of(solver.best_set)};
}

int clique_number(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("clique_number: empty graph");
    return independence_number(g.complement()).size;
}

BigRat theta(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("theta: empty graph");
    BigRat half_n(g.vertex_count(), 2);
    BigRat alpha(independence_number(g).size);
    return half_n < alpha ? half_n : alpha;
}

}  // namespace specbounds
