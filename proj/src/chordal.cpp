#include "ecsearch/chordal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecsearch {

namespace {

// The ordering is perfect iff for every vertex the neighbours placed before
// it are pairwise adjacent (no collider in the directed version).
bool ordering_is_perfect(const MixedGraph& u, const PerfectOrdering& order) {
    const int n = u.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    for (VertexId h : order) {
        std::vector<VertexId> earlier;
        for (VertexId t : u.line_neighbours(h))
            if (pos[t] < pos[h]) earlier.push_back(t);
        for (std::size_t i = 0; i < earlier.size(); ++i)
            for (std::size_t j = i + 1; j < earlier.size(); ++j)
                if (!u.adjacent(earlier[i], earlier[j])) return false;
    }
    return true;
}

}  // namespace

std::optional<PerfectOrdering> mcs_ordering(const MixedGraph& u,
                                            const std::vector<VertexId>& prefix) {
    if (u.has_arrows()) throw std::invalid_argument("mcs_ordering: input graph has arrows");
    const int n = u.vertex_count();
    std::vector<bool> in_prefix(n, false);
    for (VertexId v : prefix) {
        if (v < 0 || v >= n) throw std::invalid_argument("mcs_ordering: unknown prefix vertex");
        if (in_prefix[v]) throw std::invalid_argument("mcs_ordering: repeated prefix vertex");
        in_prefix[v] = true;
    }
    if (!is_complete_in(u, prefix))
        throw std::invalid_argument("mcs_ordering: prefix is not complete");

    PerfectOrdering order;
    order.reserve(n);
    std::vector<bool> visited(n, false);
    std::vector<int> weight(n, 0);
    auto visit = [&](VertexId v) {
        visited[v] = true;
        order.push_back(v);
        for (VertexId w : u.line_neighbours(v))
            if (!visited[w]) ++weight[w];
    };
    for (VertexId v : prefix) visit(v);
    while (static_cast<int>(order.size()) < n) {
        VertexId best = -1;
        for (VertexId v = 0; v < n; ++v)
            if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
        visit(best);
    }

    if (!ordering_is_perfect(u, order)) return std::nullopt;
    return order;
}

bool is_chordal(const MixedGraph& u) { return mcs_ordering(u, {}).has_value(); }

MixedGraph orient_by_ordering(const MixedGraph& u, const PerfectOrdering& order) {
    if (u.has_arrows()) throw std::invalid_argument("orient_by_ordering: input graph has arrows");
    const int n = u.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("orient_by_ordering: not a permutation");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        VertexId v = order[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("orient_by_ordering: not a permutation");
        pos[v] = i;
    }
    MixedGraph d(n);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b : u.line_neighbours(a))
            if (pos[a] < pos[b]) d.add_arrow(a, b);
    return d;
}

}  // namespace ecsearch
