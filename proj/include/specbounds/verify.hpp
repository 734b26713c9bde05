#pragma once

#include <string>
#include <vector>

namespace specbounds {

/// One mechanically checked claim instance.
struct ClaimResult {
    std::string id;      // prop-3.1, sec-3.2, sec-3.3, ex-3.4, thm-4.2a, thm-4.2b
    std::string params;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerifyOptions {
    std::vector<std::string> claims;  // empty = run everything
    int max_s = 4;                    // largest s for the ex-3.4 family
};

/// Re-derive the sharpness families and bound comparisons mechanically:
///   prop-3.1  lambda = -iota is closed under Cartesian products
///   sec-3.2   regular bipartite sharpness of the explicit bound
///   sec-3.3   complete multipartite sharpness
///   ex-3.4    the H_s family: eta stays 2 while lambda drops linearly
///   thm-4.2a  explicit bound <= Nikiforov bound whenever chi in {2,3}
///   thm-4.2b  the integer comparison inequality with r=4 on planar graphs
std::vector<ClaimResult> verify_paper(const VerifyOptions& options = {});

}  // namespace specbounds
