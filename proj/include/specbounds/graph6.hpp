#pragma once

#include <stdexcept>
#include <string>

#include "specbounds/graph.hpp"

namespace specbounds {

class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse one graph6 line (McKay's format, bytes 63..126, column-wise upper
/// triangle in big-endian 6-bit groups). Supports n <= 62; multi-byte size
/// headers are rejected. A leading ">>graph6<<" marker is tolerated.
Graph parse_graph6(const std::string& line);

/// Encode a graph as a graph6 line. Requires n <= 62.
std::string to_graph6(const Graph& g);

}  // namespace specbounds
