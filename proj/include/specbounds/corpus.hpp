#pragma once

#include <vector>

#include "specbounds/graph.hpp"

namespace specbounds {

/// All graphs on exactly n vertices, one canonical representative per
/// isomorphism class, in a deterministic order. Supports n <= 8; built by
/// extending the (n-1)-vertex classes with every possible neighborhood for
/// a new vertex and deduplicating on a brute-force canonical form.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Concatenation of nonisomorphic_graphs(1..max_n).
std::vector<Graph> nonisomorphic_graphs_upto(int max_n);

}  // namespace specbounds
