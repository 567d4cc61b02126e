#pragma once

#include <set>
#include <utility>
#include <vector>

namespace ecsearch {

using VertexId = int;

/// Mixed graph over vertices 0..n-1. Each unordered pair carries at most one
/// edge: a line a -- b (stored as both ordered pairs) or an arrow a -> b
/// (stored as the single ordered pair (a,b)). The ordered-pair set is kept in
/// sync with per-vertex adjacency sets so parent / child / neighbour queries
/// are cheap. Graphs are treated as immutable values once built; every
/// algorithm that needs a modified graph works on a copy.
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool line(VertexId a, VertexId b) const;
    bool arrow(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const;

    const std::set<VertexId>& parents(VertexId v) const;          // y -> v
    const std::set<VertexId>& children(VertexId v) const;         // v -> y
    const std::set<VertexId>& line_neighbours(VertexId v) const;  // y -- v
    std::set<VertexId> adjacent_vertices(VertexId v) const;

    void add_arrow(VertexId a, VertexId b);
    void add_line(VertexId a, VertexId b);
    void remove_edge(VertexId a, VertexId b);  // removes whatever edge joins a and b
    void orient(VertexId a, VertexId b);       // line a -- b  becomes  arrow a -> b
    void undirect(VertexId a, VertexId b);     // arrow a -> b becomes  line a -- b

    bool has_arrows() const;
    bool has_lines() const;

    /// Ordered-pair encoding of the structure; a line contributes both pairs.
    const std::set<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    bool operator==(const MixedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator<(const MixedGraph& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return edges_ < o.edges_;
    }

private:
    void check_vertex(VertexId v) const;
    void check_pair(VertexId a, VertexId b) const;

    int n_ = 0;
    std::set<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::set<VertexId>> parents_;
    std::vector<std::set<VertexId>> children_;
    std::vector<std::set<VertexId>> lines_;
};

/// Collider head with its unordered pair of non-adjacent tails.
struct VStructure {
    VertexId head;
    VertexId tail1;  // tail1 < tail2
    VertexId tail2;

    VStructure(VertexId h, VertexId t1, VertexId t2);

    auto operator<=>(const VStructure&) const = default;
};

MixedGraph skeleton(const MixedGraph& g);

std::set<VStructure> v_structures(const MixedGraph& g);

/// Partition of the vertices into maximal line-connected sets. Each component
/// is sorted; components are listed in order of their smallest vertex.
std::vector<std::vector<VertexId>> chain_components(const MixedGraph& g);

/// The chain component containing v, sorted.
std::vector<VertexId> chain_component_of(const MixedGraph& g, VertexId v);

/// True iff no cycle of g contains a strict arrow step.
bool is_chain_graph(const MixedGraph& g);

bool is_undirected(const MixedGraph& g);
bool is_dag(const MixedGraph& g);

/// pre: arrow a -> b. True iff pa(a) != pa(b) \ {a}.
bool is_protected(const MixedGraph& g, VertexId a, VertexId b);

/// pre: arrow a -> b. True iff the arrow sits in one of the four
/// irreversibility configurations:
///   (a) some c -> a with c, b non-adjacent
///   (b) some c -> b with c, a non-adjacent
///   (c) some c with a -> c and c -> b
///   (d) distinct c1, c2 with a -- c1, a -- c2, c1 -> b, c2 -> b and
///       c1, c2 non-adjacent
bool is_strongly_protected(const MixedGraph& g, VertexId a, VertexId b);

/// Graph on the same vertex table keeping exactly the edges with both
/// endpoints in vs, kinds preserved.
MixedGraph induced_subgraph(const MixedGraph& g, const std::vector<VertexId>& vs);

/// True iff the vertices of vs are pairwise adjacent in g.
bool is_complete_in(const MixedGraph& g, const std::vector<VertexId>& vs);
bool is_complete_in(const MixedGraph& g, const std::set<VertexId>& vs);

}  // namespace ecsearch
