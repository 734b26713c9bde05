#include "specbounds/limits.hpp"

#include <cstdlib>
#include <string>

namespace specbounds {

SolverLimits solver_limits() {
    SolverLimits limits;
    if (const char* env = std::getenv("SPECBOUNDS_MAX_N")) {
        try {
            int n = std::stoi(env);
            if (n > 0) limits = SolverLimits{n, n, n, n};
        } catch (const std::exception&) {
            // ignore unparsable values, keep defaults
        }
    }
    return limits;
}

void require_within(int n, int ceiling, const char* solver) {
    if (n > ceiling)
        throw SizeLimitError(std::string(solver) + ": n=" + std::to_string(n) +
                             " exceeds size ceiling " + std::to_string(ceiling));
}

}  // namespace specbounds
