#pragma once

#include <vector>

#include "specbounds/exact.hpp"

namespace specbounds {

/// An induced bipartite subgraph of a host graph, in host labels, with an
/// explicit bipartition of its vertex set and the induced edge count.
struct BipartiteWitness {
    std::vector<int> subset;  // S, ascending
    std::vector<int> left;    // V1
    std::vector<int> right;   // V2
    long long edges = 0;      // |E(G[S])|

    long long side_product() const {
        return static_cast<long long>(left.size()) * static_cast<long long>(right.size());
    }

    /// e / sqrt(|V1| |V2|); the radicand falls back to 1 for edgeless
    /// witnesses so the value is a plain 0.
    RootRatio ratio() const { return {edges, side_product() > 0 ? side_product() : 1}; }

    /// Average degree 2e/|S| of the induced subgraph.
    BigRat average_degree() const {
        if (subset.empty()) return BigRat(0);
        return BigRat(2 * edges, static_cast<long long>(subset.size()));
    }
};

}  // namespace specbounds
