#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "ecsearch/essential.hpp"
#include "ecsearch/graph.hpp"

namespace ecsearch {

enum class PairOpKind { remove_arrow, remove_line, add_edge };

/// The skeleton change identifying a family of neighbours: one unordered
/// vertex pair plus what currently joins it.
struct PairOp {
    VertexId a = -1;
    VertexId b = -1;
    PairOpKind kind = PairOpKind::add_edge;

    auto operator<=>(const PairOp&) const = default;
};

/// Identifies one neighbour within the family of `op`: the v-structures the
/// move creates. For removals the set is relative to the optionally-created
/// ones (tails are always {a,b}); for additions it is the absolute created
/// set.
struct Characterization {
    PairOp op;
    std::set<VStructure> created;

    auto operator<=>(const Characterization&) const = default;
};

/// Everything needed to score the move without the result graph: the vertex
/// whose parent set changes, before and after.
struct DeltaSpec {
    VertexId x = -1;
    std::vector<VertexId> old_parents;  // sorted
    std::vector<VertexId> new_parents;  // sorted
};

struct Neighbour {
    Characterization characterization;
    EssentialGraph result;
    DeltaSpec delta;

    /// Removals grow the independence set, additions shrink it.
    bool grows_independences() const {
        return characterization.op.kind != PairOpKind::add_edge;
    }
};

/// Caps the per-pair enumeration of complete subsets. With no explicit cap
/// the enumeration is exact up to 12 candidate heads and capped at 4096
/// subsets beyond that.
struct EnumerationLimits {
    std::optional<std::size_t> max_subsets_per_pair;  // nullopt = default policy

    std::size_t cap_for(std::size_t head_count) const {
        if (max_subsets_per_pair) return *max_subsets_per_pair;
        return head_count <= 12 ? static_cast<std::size_t>(-1) : 4096;
    }
};

struct NeighbourSet {
    std::vector<Neighbour> items;
    bool partial = false;  // true when a cap truncated the enumeration
};

/// Heads h whose v-structure (h, {a,b}) is created by removing a -> b from
/// some but not all class members: exactly the h with a -> h and b -- h.
/// pre: arrow a -> b.
std::set<VertexId> w_set_arrow(const EssentialGraph& e, VertexId a, VertexId b);

/// Same for removing the line a -- b: exactly the h with a -- h and b -- h.
/// pre: line a -- b.
std::set<VertexId> w_set_line(const EssentialGraph& e, VertexId a, VertexId b);

/// All neighbours reachable by deleting the arrow a -> b, one per complete
/// subset C of w_set_arrow (the heads kept as parents of b).
NeighbourSet remove_arrow_neighbours(const EssentialGraph& e, VertexId a, VertexId b,
                                     const EnumerationLimits& limits = {});

/// All neighbours reachable by deleting the line a -- b, one per complete
/// subset C of w_set_line.
NeighbourSet remove_line_neighbours(const EssentialGraph& e, VertexId a, VertexId b,
                                    const EnumerationLimits& limits = {});

/// The candidate v-structures an edge addition between a and b can create,
/// split by configuration:
///   p1: (b, {a,t}) with t -- b and t, a non-adjacent
///   p2: (b, {a,t}) with t -> b and t, a non-adjacent
///   p3: (a, {b,t}) with t -- a and t, b non-adjacent
///   p4: (a, {b,t}) with t -> a and t, b non-adjacent
/// pre: a, b non-adjacent.
struct PPartition {
    std::set<VStructure> p1, p2, p3, p4;
};
PPartition p_partition(const EssentialGraph& e, VertexId a, VertexId b);

/// All neighbours reachable by inserting an edge between a and b. Candidate
/// created-sets are enumerated per direction (p2 plus a complete-tailed
/// subset of p1, or symmetrically p4/p3) and validated by extendability of
/// the locally modified graph.
NeighbourSet add_edge_neighbours(const EssentialGraph& e, VertexId a, VertexId b,
                                 const EnumerationLimits& limits = {});

struct Boundary {
    std::vector<Neighbour> independence_growing;    // all removals
    std::vector<Neighbour> independence_shrinking;  // all additions
    bool partial = false;

    std::size_t size() const {
        return independence_growing.size() + independence_shrinking.size();
    }
};

/// The full inclusion boundary: union of the per-pair families over every
/// unordered vertex pair. `threads` > 1 fans the pairs out across workers;
/// results are merged in pair order, so the output is deterministic.
Boundary inclusion_boundary(const EssentialGraph& e, const EnumerationLimits& limits = {},
                            int threads = 1);

/// Scoring-only view of a move: characterization and delta, but no result
/// graph. Used by the search loop, which realizes only the move it takes.
struct Candidate {
    Characterization characterization;
    DeltaSpec delta;
};

struct CandidateSet {
    std::vector<Candidate> items;
    bool partial = false;
};

/// Candidates for one pair, cheap form. For removals the delta is read off
/// e and C directly; for additions the validity check already builds a
/// consistent extension, whose parent sets feed the delta.
CandidateSet pair_candidates(const EssentialGraph& e, VertexId a, VertexId b,
                             const EnumerationLimits& limits = {});

/// Builds the result graph of a candidate produced by pair_candidates on e.
Neighbour realize(const EssentialGraph& e, const Candidate& c);

}  // namespace ecsearch
