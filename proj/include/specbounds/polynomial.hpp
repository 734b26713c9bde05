#pragma once

#include <utility>
#include <vector>

#include "specbounds/exact.hpp"

namespace specbounds {

/// Monic integer polynomial, coefficients ascending (c[0] + c[1] x + ...).
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// det(xI - M) of a square integer matrix, computed exactly
/// (Faddeev-LeVerrier).
IntPolynomial characteristic_polynomial(const std::vector<std::vector<long>>& m);

/// All real roots of p with multiplicities, ascending. root_bound must
/// dominate the magnitude of every root (e.g. a Gershgorin row-sum bound
/// when p comes from a matrix). Exact squarefree decomposition isolates the
/// roots; values are refined to ~1e-13.
std::vector<std::pair<double, int>> real_roots(const IntPolynomial& p, long root_bound);

}  // namespace specbounds
