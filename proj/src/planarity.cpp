#include <cstdint>
#include <stdexcept>

#include "specbounds/invariants.hpp"
#include "specbounds/limits.hpp"

namespace specbounds {

namespace {

// All connected nonempty vertex subsets, each paired with the union of its
// members' neighborhoods (outside the subset).
struct SubsetPool {
    std::vector<std::uint32_t> sets;
    std::vector<std::uint32_t> reach;  // neighbors outside the set
};

SubsetPool connected_subsets(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = static_cast<std::uint32_t>(g.row64(v));

    SubsetPool pool;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        // flood fill from the lowest vertex
        std::uint32_t seen = mask & (~mask + 1);
        for (;;) {
            std::uint32_t grow = seen;
            for (std::uint32_t rest = seen; rest;) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                grow |= nbr[v] & mask;
            }
            if (grow == seen) break;
            seen = grow;
        }
        if (seen != mask) continue;
        std::uint32_t reach = 0;
        for (std::uint32_t rest = mask; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            reach |= nbr[v];
        }
        pool.sets.push_back(mask);
        pool.reach.push_back(reach & ~mask);
    }
    return pool;
}

// Search for 5 disjoint connected branch sets, pairwise joined by an edge.
bool has_complete_minor_5(const SubsetPool& pool) {
    const int count = static_cast<int>(pool.sets.size());
    std::uint32_t reach[5];

    auto recurse = [&](auto&& self, int depth, int first, std::uint32_t used) -> bool {
        if (depth == 5) return true;
        for (int i = first; i < count; ++i) {
            std::uint32_t candidate = pool.sets[i];
            if (candidate & used) continue;
            bool touches_all = true;
            for (int j = 0; j < depth; ++j)
                if (!(reach[j] & candidate)) {
                    touches_all = false;
                    break;
                }
            if (!touches_all) continue;
            reach[depth] = pool.reach[i];
            if (self(self, depth + 1, i + 1, used | candidate)) return true;
        }
        return false;
    };
    return recurse(recurse, 0, 0, 0);
}

// Search for branch sets A1..A3, B1..B3, disjoint and connected, with every
// A adjacent to every B. Slots are filled in the order A1 B1 A2 B2 A3 B3 so
// cross-adjacency constraints prune as early as possible. Pool indices are
// ascending within each side, and A1 precedes B1 to break the side swap.
bool has_complete_bipartite_minor_33(const SubsetPool& pool) {
    const int count = static_cast<int>(pool.sets.size());
    std::uint32_t reach[6];  // slot order: A1 B1 A2 B2 A3 B3
    int index[6];

    auto recurse = [&](auto&& self, int slot, std::uint32_t used) -> bool {
        if (slot == 6) return true;
        const int first = slot < 2 ? (slot == 0 ? 0 : index[0] + 1) : index[slot - 2] + 1;
        for (int i = first; i < count; ++i) {
            std::uint32_t candidate = pool.sets[i];
            if (candidate & used) continue;
            bool touches_opposite = true;
            for (int j = 1 - slot % 2; j < slot; j += 2)
                if (!(reach[j] & candidate)) {
                    touches_opposite = false;
                    break;
                }
            if (!touches_opposite) continue;
            index[slot] = i;
            reach[slot] = pool.reach[i];
            if (self(self, slot + 1, used | candidate)) return true;
        }
        return false;
    };
    return recurse(recurse, 0, 0);
}

}  // namespace

bool is_planar_small(const Graph& g) {
    const int n = g.vertex_count();
    require_within(n, solver_limits().planarity, "is_planar_small");
    if (n > 31) throw SizeLimitError("is_planar_small: engine supports n <= 31");
    if (n <= 4) return true;

    const long m = g.edge_count();
    if (m > 3L * n - 6) return false;

    SubsetPool pool = connected_subsets(g);
    if (m >= 10 && has_complete_minor_5(pool)) return false;
    if (m >= 9 && has_complete_bipartite_minor_33(pool)) return false;
    return true;
}

}  // namespace specbounds
