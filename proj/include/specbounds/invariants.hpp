#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "specbounds/exact.hpp"
#include "specbounds/graph.hpp"
#include "specbounds/witness.hpp"

namespace specbounds {

struct IndependenceResult {
    int size = 0;
    std::vector<int> witness;  // a maximum independent set, ascending
};

/// Exact maximum independent set via branch and bound: pivot on the
/// max-degree vertex of the candidate set, greedy lower bound, and a
/// degree-based upper bound for pruning.
IndependenceResult independence_number(const Graph& g);

/// omega(g) = independence number of the complement. g is K_{r+1}-free
/// iff clique_number(g) <= r.
int clique_number(const Graph& g);

struct ColoringResult {
    int chi = 0;
    std::vector<int> colors;  // proper coloring with chi colors
};

/// Exact chromatic number: iterative-deepening k-colorability backtracking
/// between the clique lower bound and the greedy largest-first upper bound.
/// The search picks the lowest-index uncolored vertex and tries low colors
/// first, so witnesses are deterministic.
ColoringResult chromatic_number(const Graph& g);

/// min(n/2, alpha(g)), exact; denominator 1 or 2.
BigRat theta(const Graph& g);

/// Stream the induced bipartite subgraphs of g that carry at least one edge
/// and no isolated vertex, one witness per vertex subset, each with the
/// bipartition minimizing |V1||V2| (larger color class of every component
/// aligned on the left). Subsets appear in lexicographic backtracking order.
void enumerate_induced_bipartite(const Graph& g,
                                 const std::function<void(const BipartiteWitness&)>& emit);

struct EtaResult {
    RootRatio value;  // e / sqrt(|V1||V2|) of the optimal witness
    BipartiteWitness witness;
};

/// eta(g): maximum of e/sqrt(|V1||V2|) over induced bipartite subgraphs and
/// bipartitions. The argmax compares candidates exactly (e^2 cross-multiplied
/// against side products); ties keep the first subset in search order.
/// Edgeless graphs yield 0 with an arbitrary two-vertex witness.
EtaResult eta(const Graph& g);

struct IotaResult {
    BigRat value;
    BipartiteWitness witness;
};

/// iota(g): maximum average degree 2e/|S| over induced bipartite subgraphs,
/// exact rational arithmetic in the argmax. Edgeless convention as for eta.
IotaResult iota(const Graph& g);

struct MadResult {
    BigRat value;
    std::vector<int> witness;  // subset achieving the maximum average degree
};

/// mad(g): maximum average degree over all nonempty induced subgraphs
/// (induced subgraphs suffice: fixing the vertex set, taking all edges
/// maximizes the ratio).
MadResult mad(const Graph& g);

/// Planarity for n <= 10: false iff a K_5 or K_{3,3} minor exists, found by
/// exhaustive branch-set search behind the m <= 3n-6 edge pre-filter.
bool is_planar_small(const Graph& g);

/// Exact values of every combinatorial invariant the bounds consume.
struct InvariantReport {
    int n = 0;
    long m = 0;
    IndependenceResult alpha;
    int omega = 0;
    ColoringResult chi;
    BigRat theta_value;
    std::optional<EtaResult> eta_result;    // absent when n < 2
    std::optional<IotaResult> iota_result;  // absent when n < 2
    MadResult mad_result;
};

/// Run all invariant solvers and cross-check the report's internal
/// relations (omega <= chi <= n, eta >= iota, iota <= mad).
InvariantReport compute_invariants(const Graph& g);

}  // namespace specbounds
