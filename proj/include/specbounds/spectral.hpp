#pragma once

#include <vector>

#include "specbounds/graph.hpp"
#include "specbounds/witness.hpp"

namespace specbounds {

/// Full adjacency spectrum, eigenvalues sorted descending. residual is the
/// solver's own worst |A v - lambda v|_inf over its eigenpairs.
struct Spectrum {
    std::vector<double> values;
    double residual = 0.0;
};

/// All adjacency eigenvalues via cyclic Jacobi rotations. Deterministic;
/// converges when the off-diagonal Frobenius norm drops below
/// 1e-12 * (1 + |A|_F), hard cap 100 sweeps. Throws on n = 0.
Spectrum eigenvalues_sym(const Graph& g);

/// Smallest adjacency eigenvalue.
double lambda_min(const Graph& g);

/// The test vector certifying the witness bound: 1/sqrt(|V1|) on V1,
/// -1/sqrt(|V2|) on V2, 0 elsewhere.
struct WitnessVector {
    std::vector<double> entries;
    double value = 0.0;  // x^T A x / x^T x
};

/// Build the witness test vector and evaluate its Rayleigh quotient.
/// Verifies internally that the quotient equals -e/sqrt(|V1||V2|) to 1e-12
/// relative and stays >= lambda_min(g) - 1e-9; a violation of either is a
/// solver bug and throws std::logic_error. Throws std::invalid_argument if
/// a side is empty or the witness is inconsistent with g.
WitnessVector rayleigh_witness(const Graph& g, const BipartiteWitness& w);

/// An ordered vertex partition with cell-constant neighbor counts, plus the
/// matrix of those counts.
struct EquitablePartition {
    std::vector<std::vector<int>> cells;
    std::vector<std::vector<long>> divisor;  // divisor[i][j] = neighbors in cell j
};

struct DivisorSpectrum {
    EquitablePartition partition;
    std::vector<double> eigenvalues;  // descending, with multiplicity
};

/// Verify equitability of cells and return the divisor matrix with its
/// eigenvalues. Symmetric divisor matrices go through the Jacobi solver;
/// non-symmetric ones up to 8x8 go through the exact characteristic
/// polynomial with a real-root isolator, and larger non-symmetric cases are
/// rejected. Non-equitable input throws std::invalid_argument naming the
/// violating cell pair and vertices.
DivisorSpectrum divisor_spectrum(const Graph& g, const std::vector<std::vector<int>>& cells);

struct InterlaceReport {
    double lambda_host = 0.0;
    double lambda_sub = 0.0;
    bool ok = false;  // lambda_host <= lambda_sub + 1e-9
};

/// Compare lambda_min of g against lambda_min of the subgraph induced on s.
InterlaceReport interlace_check(const Graph& g, const std::vector<int>& s);

}  // namespace specbounds
