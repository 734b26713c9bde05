#pragma once

#include <optional>
#include <vector>

#include "specbounds/exact.hpp"
#include "specbounds/graph.hpp"
#include "specbounds/witness.hpp"

namespace specbounds {

/// The witness bound -e/sqrt(|V1||V2|), exact. Throws if a side is empty.
RootRatio bound_witness(const BipartiteWitness& w);

struct EtaBound {
    RootRatio value;  // -eta as an exact (num, radicand) pair
    BipartiteWitness witness;
};

/// -eta(g) with the optimizing witness.
EtaBound bound_eta(const Graph& g);

struct IotaBound {
    BigRat value;  // -iota, exact
    BipartiteWitness witness;
};

/// -iota(g) with the optimizing witness.
IotaBound bound_iota(const Graph& g);

/// -m / (C(chi,2) * theta), exact. Throws on edgeless input.
BigRat bound_explicit(const Graph& g);

/// -2^{r+1} m^r / (r n^{2r-1}), exact big-integer arithmetic. Requires
/// r >= 2, m >= 1 and omega(g) <= r (verified; throws otherwise).
BigRat bound_nikiforov(const Graph& g, int r);

/// Sanity oracle: m <= (1 - 1/r) n^2 / 2 in exact arithmetic.
/// Requires omega(g) <= r.
bool turan_edge_check(const Graph& g, int r);

struct ComparisonCase {
    char label;        // 'a' (chi in {2,3}) or 'b' (planar)
    int r;             // chi for case a, 4 for case b
    bool headline_ok;  // bound_explicit <= bound_nikiforov(r), exact
    bool ineq_ok;      // n^{2r-1} >= (r-1) theta 2^r m^{r-1}, exact integers
};

struct ComparisonReport {
    int chi = 0;
    std::optional<bool> planar;  // unset when undecidable at this size
    std::vector<ComparisonCase> cases;

    bool applicable() const { return !cases.empty(); }
    bool ok() const {
        for (const auto& c : cases)
            if (!c.headline_ok || !c.ineq_ok) return false;
        return true;
    }
};

/// Decide applicability (chi in {2,3}, or planar) and check both the
/// headline bound comparison and the underlying integer inequality for each
/// applicable case. planar_hint short-circuits the planarity test when the
/// caller knows the answer by construction (e.g. grids). Requires m >= 1.
ComparisonReport comparison_check(const Graph& g,
                                  std::optional<bool> planar_hint = std::nullopt);

struct NikiforovValue {
    int r = 0;
    BigRat value;
};

/// Everything the CLI reports for one graph.
struct BoundReport {
    int n = 0;
    long m = 0;
    double lambda_min = 0.0;
    EtaBound eta;  // carries the exact witness pair (e, p)
    IotaBound iota;
    BigRat explicit_bound;
    std::optional<NikiforovValue> nikiforov;
    bool chain_ok = false;
    bool comparison_applicable = false;
    bool comparison_ok = false;
};

/// Evaluate every bound for g (n >= 2, m >= 1). nikiforov_r overrides the
/// default r = max(2, omega); K_{r+1}-freeness is always verified first.
BoundReport evaluate_bounds(const Graph& g, std::optional<int> nikiforov_r = std::nullopt);

}  // namespace specbounds
