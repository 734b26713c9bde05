#include "specbounds/generators.hpp"

#include <stdexcept>
#include <tuple>

namespace specbounds {

namespace {

void require_positive(int value, const char* what) {
    if (value < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Graph complete_graph(int n) {
    require_positive(n, "complete: n");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
    require_positive(n, "path: n");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph complete_multipartite(int k, int t) {
    require_positive(k, "multipartite: k");
    require_positive(t, "multipartite: t");
    std::vector<Edge> e;
    const int n = k * t;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / t != v / t) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph regular_bipartite(int d, int t) {
    require_positive(d, "regbipartite: d");
    require_positive(t, "regbipartite: t");
    if (d > t) throw std::invalid_argument("regbipartite: d must not exceed t");
    std::vector<Edge> e;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < d; ++j) e.emplace_back(i, t + (i + j) % t);
    return Graph::from_edges(2 * t, e);
}

Graph join_family_h(int s) {
    require_positive(s, "joinh: s");
    Graph two_ks = disjoint_union(complete_graph(s), complete_graph(s));
    return join(two_ks, two_ks);
}

Graph grid_graph(int a, int b) {
    require_positive(a, "grid: a");
    require_positive(b, "grid: b");
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            if (j + 1 < b) e.emplace_back(i * b + j, i * b + j + 1);
            if (i + 1 < a) e.emplace_back(i * b + j, (i + 1) * b + j);
        }
    return Graph::from_edges(a * b, e);
}

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Complete: return complete_graph(spec.a);
        case FamilySpec::Kind::Cycle: return cycle_graph(spec.a);
        case FamilySpec::Kind::Path: return path_graph(spec.a);
        case FamilySpec::Kind::CompleteMultipartite: return complete_multipartite(spec.a, spec.b);
        case FamilySpec::Kind::RegularBipartite: return regular_bipartite(spec.a, spec.b);
        case FamilySpec::Kind::JoinFamilyH: return join_family_h(spec.a);
        case FamilySpec::Kind::Grid: return grid_graph(spec.a, spec.b);
    }
    throw std::invalid_argument("unknown family kind");
}

FamilySpec FamilySpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec must look like name:args, got '" + text + "'");
    const std::string name = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);

    auto parse_int = [](const std::string& s) {
        std::size_t used = 0;
        int value = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
        return value;
    };
    auto split_two = [&](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("family '" + s + "' needs two comma-separated parameters");
        return std::pair{parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
    };

    FamilySpec spec{};
    if (name == "complete") {
        spec.kind = Kind::Complete;
        spec.a = parse_int(args);
    } else if (name == "cycle") {
        spec.kind = Kind::Cycle;
        spec.a = parse_int(args);
    } else if (name == "path") {
        spec.kind = Kind::Path;
        spec.a = parse_int(args);
    } else if (name == "multipartite") {
        spec.kind = Kind::CompleteMultipartite;
        std::tie(spec.a, spec.b) = split_two(args);
    } else if (name == "regbipartite") {
        spec.kind = Kind::RegularBipartite;
        std::tie(spec.a, spec.b) = split_two(args);
    } else if (name == "joinh") {
        spec.kind = Kind::JoinFamilyH;
        spec.a = parse_int(args);
    } else if (name == "grid") {
        spec.kind = Kind::Grid;
        std::tie(spec.a, spec.b) = split_two(args);
    } else {
        throw std::invalid_argument("unknown family '" + name + "'");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    auto one = [this](const char* n) { return std::string(n) + ":" + std::to_string(a); };
    auto two = [this](const char* n) {
        return std::string(n) + ":" + std::to_string(a) + "," + std::to_string(b);
    };
    switch (kind) {
        case Kind::Complete: return one("complete");
        case Kind::Cycle: return one("cycle");
        case Kind::Path: return one("path");
        case Kind::CompleteMultipartite: return two("multipartite");
        case Kind::RegularBipartite: return two("regbipartite");
        case Kind::JoinFamilyH: return one("joinh");
        case Kind::Grid: return two("grid");
    }
    return "?";
}

}  // namespace specbounds
