#include "specbounds/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "specbounds/polynomial.hpp"

namespace specbounds {

namespace {

struct EigenSystem {
    std::vector<double> values;   // unsorted, values[j] pairs with column j
    std::vector<double> vectors;  // row-major, vectors[i*n + j] = component i of eigenvector j
    double residual = 0.0;
};

// Cyclic Jacobi on a dense symmetric matrix (row-major).
EigenSystem jacobi_symmetric(int n, std::vector<double> a) {
    const std::vector<double> original = a;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

    double frob = 0.0;
    for (double x : a) frob += x * x;
    const double tol = 1e-12 * (1.0 + std::sqrt(frob));

    auto off_norm = [&] {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
        return std::sqrt(s);
    };

    int sweep = 0;
    for (; sweep < 100 && off_norm() >= tol; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = a[p * n + k] = c * akp - s * akq;
                    a[k * n + q] = a[q * n + k] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k * n + p], vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == 100 && off_norm() >= tol)
        throw std::runtime_error("jacobi_symmetric: no convergence after 100 sweeps");

    EigenSystem sys;
    sys.values.resize(n);
    for (int i = 0; i < n; ++i) sys.values[i] = a[i * n + i];
    sys.vectors = std::move(v);

    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            double av = 0.0;
            for (int k = 0; k < n; ++k) av += original[i * n + k] * sys.vectors[k * n + j];
            sys.residual = std::max(sys.residual, std::abs(av - sys.values[j] * sys.vectors[i * n + j]));
        }
    }
    return sys;
}

std::vector<double> adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1.0;
    return a;
}

std::vector<double> descending(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

}  // namespace

Spectrum eigenvalues_sym(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("eigenvalues_sym: empty graph");
    EigenSystem sys = jacobi_symmetric(n, adjacency_matrix(g));

    Spectrum spectrum;
    spectrum.values = descending(std::move(sys.values));
    spectrum.residual = sys.residual;
    const double lambda1 = spectrum.values.front();
    if (spectrum.residual > 1e-9 * std::max(1.0, lambda1))
        throw std::logic_error("eigenvalues_sym: residual " + std::to_string(spectrum.residual) +
                               " exceeds tolerance");
    return spectrum;
}

double lambda_min(const Graph& g) { return eigenvalues_sym(g).values.back(); }

WitnessVector rayleigh_witness(const Graph& g, const BipartiteWitness& w) {
    const int n = g.vertex_count();
    if (w.left.empty() || w.right.empty())
        throw std::invalid_argument("rayleigh_witness: empty bipartition side");

    std::vector<double> x(n, 0.0);
    std::vector<int> side(n, 0);  // 1 = left, 2 = right
    const double lval = 1.0 / std::sqrt(static_cast<double>(w.left.size()));
    const double rval = -1.0 / std::sqrt(static_cast<double>(w.right.size()));
    for (int u : w.left) {
        if (u < 0 || u >= n || side[u]) throw std::invalid_argument("rayleigh_witness: bad left side");
        side[u] = 1;
        x[u] = lval;
    }
    for (int u : w.right) {
        if (u < 0 || u >= n || side[u]) throw std::invalid_argument("rayleigh_witness: bad right side");
        side[u] = 2;
        x[u] = rval;
    }

    long long crossing = 0;
    for (const auto& [u, v] : g.edges()) {
        if (!side[u] || !side[v]) continue;
        if (side[u] == side[v])
            throw std::invalid_argument("rayleigh_witness: edge inside one side, witness not bipartite");
        ++crossing;
    }
    if (crossing != w.edges)
        throw std::invalid_argument("rayleigh_witness: edge count " + std::to_string(w.edges) +
                                    " does not match recount " + std::to_string(crossing));

    double quad = 0.0;
    for (const auto& [u, v] : g.edges()) quad += 2.0 * x[u] * x[v];
    double xtx = 0.0;
    for (double xi : x) xtx += xi * xi;

    WitnessVector result;
    result.entries = std::move(x);
    result.value = quad / xtx;

    const double expected = RootRatio{-w.edges, w.side_product()}.value();
    if (std::abs(result.value - expected) > 1e-12 * std::max(1.0, std::abs(expected)))
        throw std::logic_error("rayleigh_witness: quotient deviates from -e/sqrt(p)");
    if (result.value < lambda_min(g) - 1e-9)
        throw std::logic_error("rayleigh_witness: quotient below lambda_min");
    return result;
}

DivisorSpectrum divisor_spectrum(const Graph& g, const std::vector<std::vector<int>>& cells) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(cells.size());
    std::vector<int> cell_of(n, -1);
    for (int i = 0; i < k; ++i) {
        if (cells[i].empty()) throw std::invalid_argument("divisor_spectrum: empty cell");
        for (int u : cells[i]) {
            if (u < 0 || u >= n) throw std::invalid_argument("divisor_spectrum: vertex out of range");
            if (cell_of[u] != -1) throw std::invalid_argument("divisor_spectrum: cells overlap");
            cell_of[u] = i;
        }
    }
    for (int u = 0; u < n; ++u)
        if (cell_of[u] == -1)
            throw std::invalid_argument("divisor_spectrum: vertex " + std::to_string(u) +
                                        " not covered by any cell");

    std::vector<std::vector<long>> divisor(k, std::vector<long>(k, 0));
    std::vector<long> counts(k);
    for (int i = 0; i < k; ++i) {
        for (std::size_t idx = 0; idx < cells[i].size(); ++idx) {
            int u = cells[i][idx];
            std::fill(counts.begin(), counts.end(), 0);
            for (int w : g.neighbors(u)) ++counts[cell_of[w]];
            if (idx == 0) {
                for (int j = 0; j < k; ++j) divisor[i][j] = counts[j];
            } else {
                for (int j = 0; j < k; ++j)
                    if (counts[j] != divisor[i][j])
                        throw std::invalid_argument(
                            "divisor_spectrum: partition not equitable; vertices " +
                            std::to_string(cells[i][0]) + " and " + std::to_string(u) + " of cell " +
                            std::to_string(i) + " have " + std::to_string(divisor[i][j]) + " vs " +
                            std::to_string(counts[j]) + " neighbors in cell " + std::to_string(j));
            }
        }
    }

    bool symmetric = true;
    for (int i = 0; i < k && symmetric; ++i)
        for (int j = i + 1; j < k; ++j)
            if (divisor[i][j] != divisor[j][i]) {
                symmetric = false;
                break;
            }

    std::vector<double> eigenvalues;
    if (symmetric) {
        std::vector<double> a(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) a[i * k + j] = static_cast<double>(divisor[i][j]);
        eigenvalues = descending(jacobi_symmetric(k, std::move(a)).values);
    } else {
        if (k > 8)
            throw std::invalid_argument(
                "divisor_spectrum: non-symmetric divisor matrices above 8x8 unsupported");
        long bound = 0;
        for (int i = 0; i < k; ++i)
            bound = std::max(bound, std::accumulate(divisor[i].begin(), divisor[i].end(), 0L));
        auto roots = real_roots(characteristic_polynomial(divisor), bound);
        int total = 0;
        for (const auto& [root, mult] : roots) {
            for (int c = 0; c < mult; ++c) eigenvalues.push_back(root);
            total += mult;
        }
        if (total != k)
            throw std::logic_error("divisor_spectrum: complex eigenvalues in divisor matrix");
        eigenvalues = descending(std::move(eigenvalues));
    }

    const double floor = lambda_min(g) - 1e-9;
    if (eigenvalues.back() < floor)
        throw std::logic_error("divisor_spectrum: divisor eigenvalue below lambda_min");
    return {EquitablePartition{cells, std::move(divisor)}, std::move(eigenvalues)};
}

InterlaceReport interlace_check(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("interlace_check: empty vertex set");
    InterlaceReport report;
    report.lambda_host = lambda_min(g);
    report.lambda_sub = lambda_min(induced_subgraph(g, s).graph);
    report.ok = report.lambda_host <= report.lambda_sub + 1e-9;
    return report;
}

}  // namespace specbounds
