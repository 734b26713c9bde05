#include "specbounds/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace specbounds {

Graph Graph::edgeless(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g = edgeless(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                        " out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.set_edge(u, v);
    }
    return g;
}

void Graph::set_edge(int u, int v) {
    std::uint64_t bit = std::uint64_t{1} << (v % 64);
    std::uint64_t& word = bits_[static_cast<std::size_t>(u) * words_ + v / 64];
    if (word & bit) return;  // duplicate
    word |= bit;
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++m_;
}

void Graph::require_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                    std::to_string(n_));
}

bool Graph::adjacent(int u, int v) const {
    require_vertex(u);
    require_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    require_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += __builtin_popcountll(bits_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    require_vertex(v);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t word = bits_[static_cast<std::size_t>(v) * words_ + w];
        while (word) {
            int b = __builtin_ctzll(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

std::uint64_t Graph::row64(int v) const {
    require_vertex(v);
    if (n_ > 64) throw std::invalid_argument("row64 requires n <= 64");
    return bits_[static_cast<std::size_t>(v) * words_];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    std::vector<Edge> e;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) e.emplace_back(u, v);
    return from_edges(n_, e);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(verts[i]) +
                                        " out of range");
        to_new[verts[i]] = static_cast<int>(i);
    }
    std::vector<Edge> e;
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (to_new[w] >= 0 && v < w) e.emplace_back(to_new[v], to_new[w]);
    return {Graph::from_edges(static_cast<int>(verts.size()), e), verts};
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;  // isolated vertices end up on the left
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? b.left : b.right).push_back(v);
    return b;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("cartesian_product: empty factor");
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(g1.edge_count()) * n2 +
              static_cast<std::size_t>(g2.edge_count()) * n1);
    for (int v = 0; v < n1; ++v)
        for (const auto& [w1, w2] : g2.edges()) e.emplace_back(v * n2 + w1, v * n2 + w2);
    for (const auto& [v1, v2] : g1.edges())
        for (int w = 0; w < n2; ++w) e.emplace_back(v1 * n2 + w, v2 * n2 + w);
    return Graph::from_edges(n1 * n2, e);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    std::vector<Edge> e = g1.edges();
    for (const auto& [u, v] : g2.edges()) e.emplace_back(u + n1, v + n1);
    return Graph::from_edges(n1 + g2.vertex_count(), e);
}

Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    std::vector<Edge> e = g1.edges();
    for (const auto& [u, v] : g2.edges()) e.emplace_back(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) e.emplace_back(u, n1 + v);
    return Graph::from_edges(n1 + n2, e);
}

}  // namespace specbounds
