#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace specbounds {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Value of the form num / sqrt(radicand) with integer num and radicand >= 1.
/// This is the exact carrier for the bipartite-witness bound -e/sqrt(|V1||V2|)
/// and for eta; comparisons square through integers instead of using floats.
struct RootRatio {
    long long num = 0;
    long long radicand = 1;

    double value() const { return static_cast<double>(num) / std::sqrt(static_cast<double>(radicand)); }
    RootRatio negated() const { return {-num, radicand}; }
};

/// Three-way comparison of a/sqrt(p) vs b/sqrt(q), exact. Returns -1, 0, 1.
int compare(const RootRatio& lhs, const RootRatio& rhs);

/// Three-way comparison of num/sqrt(radicand) vs a rational, exact.
int compare(const RootRatio& lhs, const BigRat& rhs);

inline int compare(const BigRat& lhs, const BigRat& rhs) {
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

double to_double(const BigRat& q);
std::string to_string(const BigRat& q);  // "num/den"

}  // namespace specbounds
