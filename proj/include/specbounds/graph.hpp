#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace specbounds {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as per-vertex bitsets (rows of 64-bit words), so
/// induced-subgraph edge counting and subset searches stay cheap. All
/// operations are pure; a constructed Graph never mutates and is safe to
/// share across threads.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    static Graph edgeless(int n);

    /// Build from an unordered edge list. Duplicate edges collapse.
    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// Neighbor mask of v; requires n <= 64.
    std::uint64_t row64(int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    Graph complement() const;

    /// Structural equality (same labeling, same edges).
    bool operator==(const Graph& other) const = default;

private:
    void set_edge(int u, int v);
    void require_vertex(int v) const;

    int n_ = 0;
    long m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;  // row-major, n_ * words_
};

/// A split of a vertex set into two independent sides.
struct Bipartition {
    std::vector<int> left;   // V1
    std::vector<int> right;  // V2
};

/// Result of induced_subgraph: the subgraph plus the relabeling map
/// (new index -> host vertex), so witnesses can be reported in host labels.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;
};

/// Induced subgraph on s, relabeled 0..|s|-1 in ascending host order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// Proper 2-coloring if one exists (BFS per component, isolated vertices
/// placed on the left side); std::nullopt for graphs with an odd cycle.
std::optional<Bipartition> bipartition_of(const Graph& g);

/// Cartesian product: (v,w) ~ (v',w') iff v=v' and w~w', or w=w' and v~v'.
/// Vertex (v,w) maps to index v * n2 + w. Throws on an empty factor.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Disjoint union; g2's vertices are shifted by g1's vertex count.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Join: disjoint union plus all edges between the two parts.
Graph join(const Graph& g1, const Graph& g2);

}  // namespace specbounds
