// Acceptance suite: one line per criterion, PASS/FAIL with timing, nonzero
// exit when anything fails. An optional argument list of criterion numbers
// restricts the run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "specbounds/bounds.hpp"
#include "specbounds/corpus.hpp"
#include "specbounds/generators.hpp"
#include "specbounds/graph6.hpp"
#include "specbounds/invariants.hpp"
#include "specbounds/spectral.hpp"

using namespace specbounds;

namespace {

struct Failures {
    long checks = 0;
    std::vector<std::string> items;

    void check(bool ok, const std::string& label) {
        ++checks;
        if (!ok) items.push_back(label);
    }
    bool ok() const { return items.empty(); }
};

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", v);
    return buffer;
}

// 1. regular bipartite sharpness: lambda = -d and explicit bound = -d
void criterion_regular_bipartite(Failures& f) {
    for (int t = 1; t <= 5; ++t)
        for (int d = 1; d <= t; ++d) {
            Graph g = regular_bipartite(d, t);
            const double lambda = lambda_min(g);
            f.check(std::abs(lambda + d) <= 1e-7,
                    "RegularBipartite(" + std::to_string(d) + "," + std::to_string(t) +
                        "): lambda=" + fmt(lambda) + " != -" + std::to_string(d));
            f.check(bound_explicit(g) == BigRat(-d),
                    "RegularBipartite(" + std::to_string(d) + "," + std::to_string(t) +
                        "): explicit bound != -" + std::to_string(d) + " exactly");
        }
}

// 2. complete multipartite sharpness: lambda = -t, explicit = -t, chi = k,
//    alpha = t, m = C(k,2) t^2
void criterion_multipartite(Failures& f) {
    for (int k = 2; k <= 5; ++k)
        for (int t = 1; t <= 4; ++t) {
            Graph g = complete_multipartite(k, t);
            const std::string tag =
                "CompleteMultipartite(" + std::to_string(k) + "," + std::to_string(t) + ")";
            const double lambda = lambda_min(g);
            f.check(std::abs(lambda + t) <= 1e-7, tag + ": lambda=" + fmt(lambda));
            f.check(bound_explicit(g) == BigRat(-t), tag + ": explicit bound not exactly -t");
            f.check(chromatic_number(g).chi == k, tag + ": chi != k");
            f.check(independence_number(g).size == t, tag + ": alpha != t");
            f.check(g.edge_count() == static_cast<long>(k) * (k - 1) / 2 * t * t,
                    tag + ": edge count");
        }
}

// 3. H_s gap family: eta = 2 exactly (brute force), lambda = -(s+1),
//    divisor least eigenvalue = -(s+1), gap grows as s-1
void criterion_join_family(Failures& f) {
    for (int s = 1; s <= 4; ++s) {
        Graph h = join_family_h(s);
        const std::string tag = "H_" + std::to_string(s);

        oracles::EtaPair brute = s <= 3 ? oracles::brute_eta_assignments(h)
                                        : oracles::brute_eta_components(h);
        // brute e/sqrt(p) == 2  <=>  e^2 == 4 p
        f.check(brute.e * brute.e == 4 * brute.p,
                tag + ": brute-force eta = " + std::to_string(brute.e) + "/sqrt(" +
                    std::to_string(brute.p) + ") != 2");
        EtaResult solver = eta(h);
        f.check(compare(solver.value, BigRat(2)) == 0, tag + ": solver eta != 2");

        const double lambda = lambda_min(h);
        f.check(std::abs(lambda + (s + 1)) <= 1e-7, tag + ": lambda=" + fmt(lambda));

        std::vector<std::vector<int>> cells(4);
        for (int b = 0; b < 4; ++b)
            for (int v = b * s; v < (b + 1) * s; ++v) cells[b].push_back(v);
        const double least = divisor_spectrum(h, cells).eigenvalues.back();
        f.check(std::abs(least + (s + 1)) <= 1e-7, tag + ": divisor least=" + fmt(least));

        const double gap = std::abs(-solver.value.value() - lambda);
        f.check(std::abs(gap - (s - 1)) <= 1e-7, tag + ": gap=" + fmt(gap));
    }
}

// 4. Cartesian-product closure of lambda = -iota over the named factor set,
//    hypothesis audited by brute force first, products capped at n <= 20
void criterion_product_closure(Failures& f) {
    struct Factor {
        std::string name;
        Graph graph;
    };
    const std::vector<Factor> factors = {
        {"K_2", complete_graph(2)},
        {"C_4", cycle_graph(4)},
        {"K_{2,3}", join(Graph::edgeless(2), Graph::edgeless(3))},
        {"C_6", cycle_graph(6)},
    };
    for (const Factor& factor : factors) {
        const double lambda = lambda_min(factor.graph);
        const double neg_iota = -to_double(oracles::brute_iota(factor.graph));
        f.check(std::abs(lambda - neg_iota) <= 1e-7,
                "factor " + factor.name + ": lambda=" + fmt(lambda) +
                    " but -iota=" + fmt(neg_iota));
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i; j < factors.size(); ++j) {
            Graph product = cartesian_product(factors[i].graph, factors[j].graph);
            if (product.vertex_count() > 20) continue;
            const double lambda = lambda_min(product);
            const double neg_iota = -to_double(oracles::brute_iota_components(product));
            f.check(std::abs(lambda - neg_iota) <= 1e-7,
                    factors[i].name + " x " + factors[j].name + ": lambda=" + fmt(lambda) +
                        " but -iota=" + fmt(neg_iota));
        }
}

// 5. bound chain on the exhaustive n <= 7 corpus (m >= 1):
//    lambda <= -eta <= -iota <= -m/(C(chi,2) theta), last two exact
void criterion_bound_chain(Failures& f) {
    for (const Graph& g : nonisomorphic_graphs_upto(7)) {
        if (g.edge_count() < 1) continue;
        const std::string tag = to_graph6(g);
        const double lambda = lambda_min(g);
        EtaBound eb = bound_eta(g);
        IotaBound ib = bound_iota(g);
        f.check(lambda <= eb.value.value() + 1e-8, tag + ": lambda > -eta");
        f.check(compare(eb.value.negated(), -ib.value) >= 0, tag + ": eta < iota (exact)");
        f.check(ib.value <= bound_explicit(g), tag + ": -iota > explicit (exact)");
    }
}

// 6. Nikiforov strictness with r = max(2, omega), plus the two comparison
//    cases on the same corpus, all in exact arithmetic
void criterion_nikiforov_comparison(Failures& f) {
    for (const Graph& g : nonisomorphic_graphs_upto(7)) {
        if (g.edge_count() < 1) continue;
        const std::string tag = to_graph6(g);
        const int r = std::max(2, clique_number(g));
        f.check(lambda_min(g) < to_double(bound_nikiforov(g, r)) + 1e-9,
                tag + ": Nikiforov bound not strict at r=" + std::to_string(r));
        for (const ComparisonCase& c : comparison_check(g).cases) {
            if (c.label == 'a')
                f.check(c.headline_ok, tag + ": explicit > nikiforov(chi) with chi in {2,3}");
            else
                f.check(c.ineq_ok, tag + ": planar comparison inequality fails at r=4");
        }
    }
}

// 7. oracle equivalence of all exact solvers on graphs with n <= 6
void criterion_oracle_equivalence(Failures& f) {
    for (const Graph& g : nonisomorphic_graphs_upto(6)) {
        const std::string tag = to_graph6(g);
        f.check(independence_number(g).size == oracles::brute_alpha(g), tag + ": alpha");
        f.check(clique_number(g) == oracles::brute_omega(g), tag + ": omega");
        f.check(chromatic_number(g).chi == oracles::brute_chi(g), tag + ": chi");
        if (g.vertex_count() >= 2) {
            EtaResult et = eta(g);
            oracles::EtaPair brute = oracles::brute_eta_assignments(g);
            f.check(et.value.num * et.value.num * brute.p ==
                        brute.e * brute.e * et.value.radicand,
                    tag + ": eta");
            f.check(iota(g).value == oracles::brute_iota(g), tag + ": iota");
        }
        f.check(mad(g).value == oracles::brute_mad(g), tag + ": mad");
    }
}

// 8. eigensolver health: trace identities, bipartite symmetry, and the
//    witness quotient identity on every enumerated witness at n <= 6
void criterion_eigensolver_health(Failures& f) {
    for (const Graph& g : nonisomorphic_graphs_upto(7)) {
        const std::string tag = to_graph6(g);
        Spectrum s = eigenvalues_sym(g);
        double sum = 0.0, squares = 0.0;
        for (double v : s.values) {
            sum += v;
            squares += v * v;
        }
        f.check(std::abs(sum) < 1e-8, tag + ": eigenvalue sum " + fmt(sum));
        f.check(std::abs(squares - 2.0 * g.edge_count()) < 1e-6, tag + ": sum of squares");
        if (bipartition_of(g))
            f.check(std::abs(s.values.front() + s.values.back()) < 1e-9,
                    tag + ": bipartite spectrum not symmetric");
    }
    for (const Graph& g : nonisomorphic_graphs_upto(6)) {
        if (g.edge_count() < 1) continue;
        const std::string tag = to_graph6(g);
        const double floor = lambda_min(g) - 1e-9;
        enumerate_induced_bipartite(g, [&](const BipartiteWitness& w) {
            WitnessVector vec = rayleigh_witness(g, w);
            const double expected =
                -static_cast<double>(w.edges) / std::sqrt(static_cast<double>(w.side_product()));
            f.check(std::abs(vec.value - expected) <= 1e-12 * std::max(1.0, std::abs(expected)),
                    tag + ": witness quotient deviates");
            f.check(vec.value >= floor, tag + ": witness quotient below lambda_min");
        });
    }
}

struct Criterion {
    int number;
    const char* name;
    std::function<void(Failures&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "regular bipartite sharpness (1 <= d <= t <= 5)", criterion_regular_bipartite},
        {2, "complete multipartite sharpness (2 <= k <= 5, 1 <= t <= 4)", criterion_multipartite},
        {3, "H_s gap family (s = 1..4)", criterion_join_family},
        {4, "cartesian-product closure of lambda = -iota", criterion_product_closure},
        {5, "bound chain on the exhaustive n <= 7 corpus", criterion_bound_chain},
        {6, "Nikiforov strictness and bound comparison", criterion_nikiforov_comparison},
        {7, "oracle equivalence of exact solvers (n <= 6)", criterion_oracle_equivalence},
        {8, "eigensolver health and witness quotients", criterion_eigensolver_health},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        if (!selected.empty() && !selected.count(criterion.number)) continue;
        Failures f;
        const auto start = std::chrono::steady_clock::now();
        criterion.run(f);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::printf("%s criterion %d: %s [%ld checks, %.2f s]\n", f.ok() ? "PASS" : "FAIL",
                    criterion.number, criterion.name, f.checks, seconds);
        if (!f.ok()) {
            ++failed;
            const std::size_t shown = std::min<std::size_t>(f.items.size(), 12);
            for (std::size_t i = 0; i < shown; ++i)
                std::printf("       - %s\n", f.items[i].c_str());
            if (f.items.size() > shown)
                std::printf("       - ... and %zu more\n", f.items.size() - shown);
        }
        std::fflush(stdout);
    }
    if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
