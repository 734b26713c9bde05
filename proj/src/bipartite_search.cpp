#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "specbounds/invariants.hpp"
#include "specbounds/limits.hpp"

namespace specbounds {

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// Union-find with parity and strict rollback, driving the incremental
// 2-colorability test during subset backtracking. Each component root also
// tracks its two color-class sizes so |V1|-|V2| of the best-aligned
// bipartition is available as the running sum of class-size gaps.
class ParityDsu {
public:
    explicit ParityDsu(int n) : parent_(n), parity_(n), rank_(n), count0_(n), count1_(n) {}

    int gap_sum() const { return gap_sum_; }

    void make(int v) {
        parent_[v] = v;
        parity_[v] = 0;
        rank_[v] = 0;
        count0_[v] = 1;
        count1_[v] = 0;
        gap_sum_ += 1;
    }

    void unmake(int /*v*/) { gap_sum_ -= 1; }

    // Links v and u with opposite colors. Returns false on an odd cycle
    // (nothing changes in that case). Successful links push one undo record.
    bool link_opposite(int v, int u) {
        auto [rv, pv] = find(v);
        auto [ru, pu] = find(u);
        if (rv == ru) return pv != pu;
        if (rank_[rv] < rank_[ru]) {
            std::swap(rv, ru);
            std::swap(pv, pu);
        }
        Undo undo{ru, rv, count0_[rv], count1_[rv], rank_[rv], gap_sum_};
        gap_sum_ -= std::abs(count0_[rv] - count1_[rv]) + std::abs(count0_[ru] - count1_[ru]);
        const int attach_parity = pv ^ pu ^ 1;
        parent_[ru] = rv;
        parity_[ru] = attach_parity;
        if (attach_parity == 0) {
            count0_[rv] += count0_[ru];
            count1_[rv] += count1_[ru];
        } else {
            count0_[rv] += count1_[ru];
            count1_[rv] += count0_[ru];
        }
        gap_sum_ += std::abs(count0_[rv] - count1_[rv]);
        if (rank_[rv] == rank_[ru]) ++rank_[rv];
        undos_.push_back(undo);
        return true;
    }

    std::size_t undo_marker() const { return undos_.size(); }

    void rollback_to(std::size_t marker) {
        while (undos_.size() > marker) {
            const Undo& undo = undos_.back();
            parent_[undo.child] = undo.child;
            parity_[undo.child] = 0;
            count0_[undo.target] = undo.target_count0;
            count1_[undo.target] = undo.target_count1;
            rank_[undo.target] = undo.target_rank;
            gap_sum_ = undo.gap_sum;
            undos_.pop_back();
        }
    }

private:
    struct Undo {
        int child, target;
        int target_count0, target_count1, target_rank;
        int gap_sum;
    };

    std::pair<int, int> find(int v) const {
        int parity = 0;
        while (parent_[v] != v) {
            parity ^= parity_[v];
            v = parent_[v];
        }
        return {v, parity};
    }

    std::vector<int> parent_, parity_, rank_, count0_, count1_;
    std::vector<Undo> undos_;
    int gap_sum_ = 0;
};

struct ScanState {
    std::uint64_t mask = 0;  // S
    long long edges = 0;     // |E(G[S])|
    int size = 0;
    int gap = 0;       // |V1| - |V2| of the product-minimizing bipartition
    int isolated = 0;  // vertices of S without neighbors in S

    long long side_product() const {
        long long v1 = (size + gap) / 2, v2 = (size - gap) / 2;
        return v1 * v2;
    }
};

// Visits every nonempty induced bipartite subset of g exactly once, in
// lexicographic backtracking order (include branch first). Subsets whose
// induced graph contains an odd cycle are pruned together with all their
// supersets.
template <typename Visit>
void scan_bipartite_subsets(const Graph& g, Visit&& visit) {
    const int n = g.vertex_count();
    if (n == 0) return;
    if (n > 64) throw SizeLimitError("bipartite subset scan supports n <= 64");

    std::vector<std::uint64_t> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.row64(v);

    ParityDsu dsu(n);
    std::vector<int> deg_in(n, 0);
    ScanState st;

    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) return;

        const std::uint64_t in_nbrs = nbr[v] & st.mask;
        const std::size_t marker = dsu.undo_marker();
        dsu.make(v);
        bool feasible = true;
        for (std::uint64_t rest = in_nbrs; rest;) {
            int u = __builtin_ctzll(rest);
            rest &= rest - 1;
            if (!dsu.link_opposite(v, u)) {
                feasible = false;
                break;
            }
        }
        if (feasible) {
            const int dv = popcount(in_nbrs);
            st.mask |= std::uint64_t{1} << v;
            st.size += 1;
            st.edges += dv;
            st.gap = dsu.gap_sum();
            if (dv == 0) st.isolated += 1;
            for (std::uint64_t rest = in_nbrs; rest;) {
                int u = __builtin_ctzll(rest);
                rest &= rest - 1;
                if (deg_in[u]++ == 0) st.isolated -= 1;
            }
            deg_in[v] = dv;

            visit(st);
            self(self, v + 1);

            for (std::uint64_t rest = in_nbrs; rest;) {
                int u = __builtin_ctzll(rest);
                rest &= rest - 1;
                if (--deg_in[u] == 0) st.isolated += 1;
            }
            if (dv == 0) st.isolated -= 1;
            st.edges -= dv;
            st.size -= 1;
            st.mask &= ~(std::uint64_t{1} << v);
        }
        dsu.rollback_to(marker);
        dsu.unmake(v);
        st.gap = dsu.gap_sum();

        self(self, v + 1);
    };
    recurse(recurse, 0);
}

// Rebuild the witness for a subset: 2-color each component by BFS and align
// every component's larger color class on the left, which minimizes
// |V1| * |V2| over all bipartitions of G[S].
BipartiteWitness witness_for_subset(const Graph& g, std::uint64_t mask) {
    BipartiteWitness w;
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> class0, class1;
    for (int start = 0; start < n; ++start) {
        if (!((mask >> start) & 1)) continue;
        w.subset.push_back(start);
        if (color[start] != -1) continue;
        class0.clear();
        class1.clear();
        color[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            (color[v] == 0 ? class0 : class1).push_back(v);
            for (int u : g.neighbors(v)) {
                if (!((mask >> u) & 1)) continue;
                if (v < u) w.edges += 1;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    throw std::logic_error("witness_for_subset: subset is not bipartite");
                }
            }
        }
        auto& bigger = class0.size() >= class1.size() ? class0 : class1;
        auto& smaller = class0.size() >= class1.size() ? class1 : class0;
        w.left.insert(w.left.end(), bigger.begin(), bigger.end());
        w.right.insert(w.right.end(), smaller.begin(), smaller.end());
    }
    std::sort(w.left.begin(), w.left.end());
    std::sort(w.right.begin(), w.right.end());
    return w;
}

void require_scan_size(const Graph& g, const char* solver) {
    require_within(g.vertex_count(), solver_limits().bipartite_search, solver);
    if (g.vertex_count() > 64) throw SizeLimitError(std::string(solver) + ": engine supports n <= 64");
}

BipartiteWitness two_vertex_fallback() {
    BipartiteWitness w;
    w.subset = {0, 1};
    w.left = {0};
    w.right = {1};
    w.edges = 0;
    return w;
}

}  // namespace

void enumerate_induced_bipartite(const Graph& g,
                                 const std::function<void(const BipartiteWitness&)>& emit) {
    require_scan_size(g, "enumerate_induced_bipartite");
    scan_bipartite_subsets(g, [&](const ScanState& st) {
        if (st.edges < 1 || st.isolated > 0) return;
        emit(witness_for_subset(g, st.mask));
    });
}

EtaResult eta(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("eta: need at least two vertices");
    require_scan_size(g, "eta");

    long long best_e = 0, best_p = 1;
    std::uint64_t best_mask = 0;
    scan_bipartite_subsets(g, [&](const ScanState& st) {
        if (st.edges < 1 || st.isolated > 0) return;
        const long long p = st.side_product();
        // e1/sqrt(p1) > e2/sqrt(p2)  <=>  e1^2 p2 > e2^2 p1 (all positive)
        if (st.edges * st.edges * best_p > best_e * best_e * p) {
            best_e = st.edges;
            best_p = p;
            best_mask = st.mask;
        }
    });
    if (best_mask == 0) return {{0, 1}, two_vertex_fallback()};

    BipartiteWitness w = witness_for_subset(g, best_mask);
    if (w.edges != best_e || w.side_product() != best_p)
        throw std::logic_error("eta: witness reconstruction mismatch");
    return {{best_e, best_p}, std::move(w)};
}

IotaResult iota(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("iota: need at least two vertices");
    require_scan_size(g, "iota");

    long long best_e = 0, best_s = 1;
    std::uint64_t best_mask = 0;
    scan_bipartite_subsets(g, [&](const ScanState& st) {
        if (st.edges < 1 || st.isolated > 0) return;
        // 2 e1 / s1 > 2 e2 / s2  <=>  e1 s2 > e2 s1
        if (st.edges * best_s > best_e * st.size) {
            best_e = st.edges;
            best_s = st.size;
            best_mask = st.mask;
        }
    });
    if (best_mask == 0) return {BigRat(0), two_vertex_fallback()};

    BipartiteWitness w = witness_for_subset(g, best_mask);
    if (w.edges != best_e || static_cast<long long>(w.subset.size()) != best_s)
        throw std::logic_error("iota: witness reconstruction mismatch");
    return {BigRat(2 * best_e, best_s), std::move(w)};
}

MadResult mad(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("mad: empty graph");
    require_within(n, solver_limits().bipartite_search, "mad");
    if (n > 64) throw SizeLimitError("mad: engine supports n <= 64");

    std::vector<std::uint64_t> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.row64(v);

    long long best_e = 0, best_s = 1;
    std::uint64_t best_mask = 1;  // single vertex, average degree 0
    std::uint64_t mask = 0;
    long long edges = 0;
    int size = 0;

    auto recurse = [&](auto&& self, int v) -> void {
        if (v == n) return;
        const int dv = popcount(nbr[v] & mask);
        mask |= std::uint64_t{1} << v;
        edges += dv;
        size += 1;
        if (edges * best_s > best_e * size) {
            best_e = edges;
            best_s = size;
            best_mask = mask;
        }
        self(self, v + 1);
        mask &= ~(std::uint64_t{1} << v);
        edges -= dv;
        size -= 1;
        self(self, v + 1);
    };
    recurse(recurse, 0);

    std::vector<int> witness;
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1) witness.push_back(v);
    return {BigRat(2 * best_e, best_s), std::move(witness)};
}

InvariantReport compute_invariants(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("compute_invariants: empty graph");

    InvariantReport report;
    report.n = n;
    report.m = g.edge_count();
    report.alpha = independence_number(g);
    report.omega = clique_number(g);
    report.chi = chromatic_number(g);
    report.theta_value = theta(g);
    if (n >= 2) {
        report.eta_result = eta(g);
        report.iota_result = iota(g);
    }
    report.mad_result = mad(g);

    if (report.omega > report.chi.chi || report.chi.chi > n)
        throw std::logic_error("compute_invariants: omega <= chi <= n violated");
    if (report.alpha.size < 1 || report.alpha.size > n)
        throw std::logic_error("compute_invariants: alpha out of range");
    if (report.eta_result &&
        compare(report.eta_result->value, report.iota_result->value) < 0)
        throw std::logic_error("compute_invariants: eta < iota");
    if (report.iota_result && report.iota_result->value > report.mad_result.value)
        throw std::logic_error("compute_invariants: iota > mad");
    return report;
}

}  // namespace specbounds
