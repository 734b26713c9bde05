#pragma once

#include <stdexcept>

namespace specbounds {

/// Raised when a graph exceeds an exact solver's size ceiling. Batch runs
/// catch this to mark rows skipped instead of aborting.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Size ceilings for the exponential solvers. The SPECBOUNDS_MAX_N
/// environment variable, when set, replaces every ceiling.
struct SolverLimits {
    int independence = 40;      // branch-and-bound independent set
    int coloring = 30;          // chromatic number search
    int bipartite_search = 24;  // eta / iota / mad subset enumeration
    int planarity = 10;         // minor-based planarity certifier
};

/// Current limits; reads SPECBOUNDS_MAX_N on every call so tests can
/// adjust the environment at runtime.
SolverLimits solver_limits();

/// Throws SizeLimitError when n exceeds the ceiling.
void require_within(int n, int ceiling, const char* solver);

}  // namespace specbounds
