#pragma once

#include <string>

#include "specbounds/graph.hpp"

namespace specbounds {

/// Parametrized graph family.
///
/// Text form (used by the CLI): "complete:N", "cycle:N", "path:N",
/// "multipartite:K,T", "regbipartite:D,T", "joinh:S", "grid:A,B".
struct FamilySpec {
    enum class Kind {
        Complete,
        Cycle,
        Path,
        CompleteMultipartite,  // k parts of t vertices each
        RegularBipartite,      // d-regular on t+t vertices (circulant)
        JoinFamilyH,           // join of two copies of K_s + K_s
        Grid,                  // a x b grid
    };

    Kind kind;
    int a = 0;
    int b = 0;

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

/// Build the graph described by spec. Throws std::invalid_argument on bad
/// parameters (non-positive sizes, d > t, cycles shorter than 3).
Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Complete k-partite graph with t vertices per part; part p holds the
/// vertices p*t .. p*t+t-1. n = k*t, m = C(k,2)*t^2.
Graph complete_multipartite(int k, int t);

/// d-regular bipartite circulant on sides u_0..u_{t-1} and w_0..w_{t-1}
/// (indices t..2t-1), with u_i ~ w_{(i+j) mod t} for j = 0..d-1.
Graph regular_bipartite(int d, int t);

/// H_s: the join of two copies of K_s + K_s. Vertices fall into the four
/// s-blocks [0,s), [s,2s), [2s,3s), [3s,4s); every vertex has degree 3s-1.
Graph join_family_h(int s);

/// a x b grid; vertex (i,j) is i*b + j.
Graph grid_graph(int a, int b);

}  // namespace specbounds
