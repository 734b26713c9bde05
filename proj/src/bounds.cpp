#include "specbounds/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "specbounds/invariants.hpp"
#include "specbounds/limits.hpp"
#include "specbounds/spectral.hpp"

namespace specbounds {

namespace {

BigInt int_pow(BigInt base, int exponent) {
    BigInt out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

// n^{2r-1} >= (r-1) theta 2^r m^{r-1}, cleared of theta's denominator:
// 2 n^{2r-1} >= (r-1) * min(n, 2 alpha) * 2^r * m^{r-1}.
bool inequality_41(long n, long m, long two_theta, int r) {
    BigInt lhs = 2 * int_pow(BigInt(n), 2 * r - 1);
    BigInt rhs = BigInt(r - 1) * two_theta * int_pow(BigInt(2), r) * int_pow(BigInt(m), r - 1);
    return lhs >= rhs;
}

}  // namespace

RootRatio bound_witness(const BipartiteWitness& w) {
    if (w.left.empty() || w.right.empty())
        throw std::invalid_argument("bound_witness: empty bipartition side");
    return {-w.edges, w.side_product()};
}

EtaBound bound_eta(const Graph& g) {
    EtaResult result = eta(g);
    return {result.value.negated(), std::move(result.witness)};
}

IotaBound bound_iota(const Graph& g) {
    IotaResult result = iota(g);
    return {-result.value, std::move(result.witness)};
}

BigRat bound_explicit(const Graph& g) {
    if (g.edge_count() < 1) throw std::invalid_argument("bound_explicit: edgeless graph");
    const int chi = chromatic_number(g).chi;  // >= 2 here
    const BigRat pairs(static_cast<long>(chi) * (chi - 1), 2);
    return BigRat(-g.edge_count()) / (pairs * theta(g));
}

BigRat bound_nikiforov(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("bound_nikiforov: r must be at least 2");
    const long m = g.edge_count();
    if (m < 1) throw std::invalid_argument("bound_nikiforov: edgeless graph");
    const int omega = clique_number(g);
    if (omega > r)
        throw std::invalid_argument("bound_nikiforov: graph contains K_" + std::to_string(omega) +
                                    ", not K_" + std::to_string(r + 1) + "-free");
    const long n = g.vertex_count();
    BigInt numerator = int_pow(BigInt(2), r + 1) * int_pow(BigInt(m), r);
    BigInt denominator = BigInt(r) * int_pow(BigInt(n), 2 * r - 1);
    return BigRat(-numerator, denominator);
}

bool turan_edge_check(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("turan_edge_check: r must be positive");
    const int omega = clique_number(g);
    if (omega > r)
        throw std::invalid_argument("turan_edge_check: graph contains K_" + std::to_string(omega));
    // m <= (1 - 1/r) n^2 / 2  <=>  2 r m <= (r-1) n^2
    BigInt lhs = BigInt(2) * r * g.edge_count();
    BigInt rhs = BigInt(r - 1) * g.vertex_count() * g.vertex_count();
    return lhs <= rhs;
}

ComparisonReport comparison_check(const Graph& g, std::optional<bool> planar_hint) {
    const long m = g.edge_count();
    if (m < 1) throw std::invalid_argument("comparison_check: edgeless graph");
    const long n = g.vertex_count();

    ComparisonReport report;
    report.chi = chromatic_number(g).chi;
    if (planar_hint) {
        report.planar = *planar_hint;
    } else if (n <= solver_limits().planarity) {
        report.planar = is_planar_small(g);
    }

    const BigRat explicit_value = bound_explicit(g);
    const long two_theta = std::min(n, 2L * independence_number(g).size);

    auto run_case = [&](char label, int r) {
        ComparisonCase c{label, r, false, false};
        c.headline_ok = explicit_value <= bound_nikiforov(g, r);
        c.ineq_ok = inequality_41(n, m, two_theta, r);
        report.cases.push_back(c);
    };
    if (report.chi == 2 || report.chi == 3) run_case('a', report.chi);
    if (report.planar.value_or(false)) run_case('b', 4);
    return report;
}

BoundReport evaluate_bounds(const Graph& g, std::optional<int> nikiforov_r) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("evaluate_bounds: need at least two vertices");
    if (g.edge_count() < 1) throw std::invalid_argument("evaluate_bounds: edgeless graph");

    BoundReport report;
    report.n = n;
    report.m = g.edge_count();
    report.lambda_min = lambda_min(g);
    report.eta = bound_eta(g);
    report.iota = bound_iota(g);
    report.explicit_bound = bound_explicit(g);

    const int r = nikiforov_r.value_or(std::max(2, clique_number(g)));
    report.nikiforov = NikiforovValue{r, bound_nikiforov(g, r)};

    const RootRatio eta_value = report.eta.value.negated();  // +eta
    const BigRat iota_value = -report.iota.value;            // +iota
    const bool lambda_le_eta = report.lambda_min <= report.eta.value.value() + 1e-8;
    const bool eta_ge_iota = compare(eta_value, iota_value) >= 0;
    const bool iota_le_explicit = report.iota.value <= report.explicit_bound;
    report.chain_ok = lambda_le_eta && eta_ge_iota && iota_le_explicit;

    ComparisonReport comparison = comparison_check(g);
    report.comparison_applicable = comparison.applicable();
    report.comparison_ok = comparison.ok();
    return report;
}

}  // namespace specbounds
