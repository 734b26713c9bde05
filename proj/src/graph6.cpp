#include "specbounds/graph6.hpp"

#include <string_view>
#include <vector>

namespace specbounds {

namespace {
constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
}  // namespace

Graph parse_graph6(const std::string& line) {
    std::string_view text(line);
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty line");

    for (char c : text)
        if (c < 63 || c > 126)
            throw Graph6Error("graph6: byte " + std::to_string(int(static_cast<unsigned char>(c))) +
                              " outside 63..126");

    if (text[0] == 126)
        throw Graph6Error("graph6: multi-byte size header (n > 62) not supported");
    const int n = text[0] - kBias;
    text.remove_prefix(1);

    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    const long need = (pairs + 5) / 6;
    if (static_cast<long>(text.size()) != need)
        throw Graph6Error("graph6: malformed length, expected " + std::to_string(need) +
                          " data bytes for n=" + std::to_string(n) + ", got " +
                          std::to_string(text.size()));

    std::vector<Edge> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int value = text[bit / 6] - kBias;
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw Graph6Error("graph6: n > 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

}  // namespace specbounds
